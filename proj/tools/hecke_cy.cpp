#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "hecke/error.hpp"
#include "hecke/report.hpp"

using namespace hecke;

namespace {

struct Common {
  std::string input = "-";
  std::string builtin_name;
  std::string qmatrix;
  std::size_t cap = 0;
  std::string format = "json";
  std::string convention;
};

void add_common(CLI::App* sub, Common& c, bool with_input) {
  if (with_input) {
    sub->add_option("input", c.input, "input document (\"-\" for stdin)");
    sub->add_option("--builtin", c.builtin_name, "use a built-in family instead of a file")
        ->check(CLI::IsMember({"diagonal", "example2", "trivial1"}));
    sub->add_option("--qmatrix", c.qmatrix, "q-matrix for --builtin diagonal, as JSON");
  }
  sub->add_option("--cap", c.cap, "highest degree checked");
  sub->add_option("--format", c.format, "output format")->check(CLI::IsMember({"json", "text"}));
  sub->add_option("--convention", c.convention, "table convention")
      ->check(CLI::IsMember({"standard", "transpose"}));
}

InputSpec load(const Common& c) {
  if (!c.builtin_name.empty()) {
    nlohmann::json params = nlohmann::json::object();
    if (!c.qmatrix.empty()) {
      try {
        params["qmatrix"] = nlohmann::json::parse(c.qmatrix);
      } catch (const nlohmann::json::parse_error& e) {
        throw Error("ParseError", std::string("--qmatrix: ") + e.what());
      }
    }
    return builtin(c.builtin_name, params);
  }
  return parse_input_file(c.input);
}

AnalyzeOptions options(const Common& c, Depth depth) {
  AnalyzeOptions o;
  if (c.cap) o.cap = c.cap;
  if (!c.convention.empty()) o.convention = parse_convention(c.convention);
  o.depth = depth;
  return o;
}

int reject(const Error& e, const std::string& stage) {
  AnalysisReport r;
  r.status = e.is_rejection() ? "rejected" : "error";
  r.failed_stage = stage;
  r.error_kind = e.kind();
  r.error_detail = e.detail();
  std::cerr << r.error_kind << " at stage " << stage << ": " << r.error_detail << "\n";
  return r.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Calabi-Yau checker for Nichols algebras of Hecke-type braidings"};
  app.require_subcommand(1);

  Common validate_opts, analyze_opts, oracle_opts, builtin_opts;
  auto* validate = app.add_subcommand("validate", "check braid equation, Hecke label and rigidity");
  add_common(validate, validate_opts, true);
  auto* analyze_cmd = app.add_subcommand("analyze", "run the full pipeline and print the report");
  add_common(analyze_cmd, analyze_opts, true);
  auto* oracle = app.add_subcommand("oracle", "print the brute-force Frobenius/Nakayama data");
  add_common(oracle, oracle_opts, true);
  auto* builtin_cmd = app.add_subcommand("builtin", "print the input document of a built-in family");
  std::string builtin_name;
  std::string builtin_q;
  builtin_cmd->add_option("name", builtin_name, "family name")
      ->required()
      ->check(CLI::IsMember({"diagonal", "example2", "trivial1"}));
  builtin_cmd->add_option("--qmatrix", builtin_q, "q-matrix for diagonal, as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*builtin_cmd) {
      Common c;
      c.builtin_name = builtin_name;
      c.qmatrix = builtin_q;
      std::cout << to_json(load(c)).dump(2) << "\n";
      return 0;
    }

    Common* c = *validate ? &validate_opts : *analyze_cmd ? &analyze_opts : &oracle_opts;
    InputSpec spec;
    try {
      spec = load(*c);
    } catch (const Error& e) {
      return reject(e, "parse");
    }
    AnalyzeOptions o;
    try {
      o = options(*c, *validate ? Depth::validate : Depth::full);
    } catch (const Error& e) {
      return reject(e, "parse");
    }
    const AnalysisReport report = analyze(spec, o);
    const Format fmt = c->format == "text" ? Format::text : Format::json;
    if (*oracle && fmt == Format::json)
      std::cout << oracle_json(report).dump(2) << "\n";
    else
      std::cout << emit_report(report, fmt);
    if (report.status != "completed")
      std::cerr << report.error_kind << " at stage " << report.failed_stage << ": " << report.error_detail << "\n";
    return report.exit_code();
  } catch (const Error& e) {
    return reject(e, "cli");
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
