#include "hecke/report.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <sstream>

#include "hecke/error.hpp"

namespace hecke {

using nlohmann::json;

Convention parse_convention(const std::string& s) {
  if (s == "standard") return Convention::standard;
  if (s == "transpose") return Convention::transpose;
  throw Error("BadInput", "unknown convention '" + s + "'");
}

std::string to_string(Convention c) { return c == Convention::standard ? "standard" : "transpose"; }

namespace {

Scalar scalar_from_json(const json& v) {
  if (v.is_string()) return parse_scalar(v.get<std::string>());
  if (v.is_number_integer()) return parse_scalar(std::to_string(v.get<long long>()));
  throw Error("BadScalar", v.dump());
}

Mat matrix_from_json(const json& rows, const std::string& what) {
  if (!rows.is_array()) throw Error("BadInput", what + " must be an array of rows");
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.front().size();
  Mat m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (!rows[i].is_array() || rows[i].size() != c)
      throw Error("DimensionMismatch", what + " row " + std::to_string(i) + " has the wrong length");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = scalar_from_json(rows[i][j]);
  }
  return m;
}

json matrix_to_json(const Mat& m) { return to_strings(m); }

constexpr std::array<std::size_t, 16> kExample2Permutation = {0, 11, 7, 12, 14, 5, 9, 2,
                                                              13, 6, 10, 1, 3, 8, 4, 15};

void apply_options(InputSpec& spec, const json& doc) {
  if (doc.contains("cap")) {
    if (!doc["cap"].is_number_unsigned()) throw Error("BadInput", "cap must be a positive integer");
    spec.cap = doc["cap"].get<std::size_t>();
  }
  if (doc.contains("convention")) spec.convention = parse_convention(doc["convention"].get<std::string>());
}

}  // namespace

InputSpec builtin(const std::string& name, const json& params) {
  InputSpec spec;
  spec.name = name;
  if (name == "example2") {
    spec.dimension = 4;
    spec.braiding = Mat(16, 16);
    for (std::size_t r = 0; r < 16; ++r) spec.braiding(r, kExample2Permutation[r]) = 1;
  } else if (name == "trivial1") {
    spec.dimension = 1;
    spec.braiding = Mat{{1}};
  } else if (name == "diagonal") {
    if (!params.contains("qmatrix")) throw Error("BadFamilyParams", "diagonal family needs a qmatrix");
    Mat q = matrix_from_json(params["qmatrix"], "qmatrix");
    const std::size_t n = q.rows();
    if (n == 0 || q.cols() != n) throw Error("BadFamilyParams", "qmatrix must be square and nonempty");
    for (std::size_t i = 0; i < n; ++i) {
      if (q(i, i) != 1) throw Error("BadFamilyParams", "q_ii must be 1");
      for (std::size_t j = 0; j < n; ++j)
        if (q(i, j) * q(j, i) != 1)
          throw Error("BadFamilyParams", "q_ij q_ji != 1 at (" + std::to_string(i + 1) + "," +
                                             std::to_string(j + 1) + ")");
    }
    spec.dimension = n;
    spec.braiding = diagonal_braiding(q).table();
    spec.name = "diagonal";
  } else {
    throw Error("UnknownBuiltin", name);
  }
  if (params.is_object() && params.contains("name")) spec.name = params["name"].get<std::string>();
  if (params.is_object()) apply_options(spec, params);
  return spec;
}

InputSpec parse_input_json(const json& doc) {
  if (!doc.is_object()) throw Error("BadInput", "document must be a JSON object");
  try {
    if (doc.contains("family")) return builtin(doc["family"].get<std::string>(), doc);
    InputSpec spec;
    spec.name = doc.value("name", std::string("unnamed"));
    if (!doc.contains("dimension") || !doc["dimension"].is_number_unsigned())
      throw Error("BadInput", "missing positive integer 'dimension'");
    spec.dimension = doc["dimension"].get<std::size_t>();
    if (spec.dimension == 0) throw Error("BadInput", "dimension must be positive");
    if (doc.contains("label") && !doc["label"].is_null()) spec.label = scalar_from_json(doc["label"]);
    if (!doc.contains("braiding")) throw Error("BadInput", "missing 'braiding'");
    spec.braiding = matrix_from_json(doc["braiding"], "braiding");
    const std::size_t n2 = spec.dimension * spec.dimension;
    if (spec.braiding.rows() != n2 || spec.braiding.cols() != n2)
      throw Error("DimensionMismatch", "braiding is " + std::to_string(spec.braiding.rows()) + "x" +
                                           std::to_string(spec.braiding.cols()) + ", expected " +
                                           std::to_string(n2) + "x" + std::to_string(n2));
    apply_options(spec, doc);
    return spec;
  } catch (const json::exception& e) {
    throw Error("BadInput", e.what());
  }
}

InputSpec parse_input(std::istream& in) {
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    const std::size_t upto = std::min<std::size_t>(e.byte, text.size());
    const auto line = 1 + std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(upto), '\n');
    throw Error("ParseError", "line " + std::to_string(line) + ": " + e.what());
  }
  return parse_input_json(doc);
}

InputSpec parse_input_file(const std::string& path) {
  if (path == "-") return parse_input(std::cin);
  std::ifstream in(path);
  if (!in) throw Error("BadInput", "cannot open " + path);
  return parse_input(in);
}

json to_json(const InputSpec& spec) {
  json doc;
  doc["name"] = spec.name;
  doc["dimension"] = spec.dimension;
  if (spec.label) doc["label"] = to_string(*spec.label);
  doc["braiding"] = matrix_to_json(spec.braiding);
  if (spec.cap) doc["cap"] = *spec.cap;
  if (spec.convention) doc["convention"] = to_string(*spec.convention);
  return doc;
}

Braiding to_braiding(const InputSpec& spec, Convention convention) {
  return Braiding(spec.dimension, convention == Convention::transpose ? spec.braiding.transpose() : spec.braiding);
}

std::string checksum(const InputSpec& spec) {
  std::uint64_t h = 14695981039346656037ull;
  auto feed = [&h](const std::string& s) {
    for (unsigned char ch : s) {
      h ^= ch;
      h *= 1099511628211ull;
    }
    h ^= 0xff;
    h *= 1099511628211ull;
  };
  feed(std::to_string(spec.dimension));
  for (std::size_t r = 0; r < spec.braiding.rows(); ++r)
    for (std::size_t c = 0; c < spec.braiding.cols(); ++c) feed(to_string(spec.braiding(r, c)));
  std::ostringstream out;
  out << "fnv1a64:" << std::hex << std::setw(16) << std::setfill('0') << h;
  return out.str();
}

int AnalysisReport::exit_code() const {
  if (status == "completed") return 0;
  if (status == "rejected") return 2;
  return 1;
}

AnalysisReport analyze(const InputSpec& spec, const AnalyzeOptions& options) {
  AnalysisReport rep;
  rep.name = spec.name;
  rep.dimension = spec.dimension;
  rep.convention = options.convention.value_or(spec.convention.value_or(Convention::standard));
  rep.checksum = checksum(spec);
  rep.cap = options.cap.value_or(spec.cap.value_or(default_cap(spec.dimension)));
  rep.caveats.push_back("Noetherian: assumed (not algorithmically checkable)");
  rep.caveats.push_back("cap used: " + std::to_string(rep.cap) +
                        "; Koszulity and AS-regularity are certified only within the checked degrees");

  std::string stage;
  try {
    stage = "braiding";
    const Braiding b = to_braiding(spec, rep.convention);
    rep.stages_completed.push_back(stage);

    stage = "validate";
    rep.braid_equation = validate_braid_equation(b);
    if (!*rep.braid_equation) throw Error("NotBraided", "braid equation fails");
    rep.invertible = is_invertible(b);
    if (!*rep.invertible) throw Error("NotInvertible", "c is not invertible on V (x) V");
    rep.label = verify_label(b, spec.label);
    rep.rigid = rigidity_check(b);
    rep.rigidity_routes_agree = rigidity_matrix(b) == rigidity_matrix_by_composition(b);
    if (!*rep.rigid) throw Error("NotRigid", "c^b : V* (x) V -> V (x) V* is singular");
    rep.stages_completed.push_back(stage);
    if (options.depth == Depth::validate) return rep;
    const Scalar q = *rep.label;

    stage = "quadratic";
    const QuadraticData qd = build_quadratic(b, q);
    rep.relations_dim = qd.relations.dim();
    rep.dual_relations_dim = qd.dual_relations.dim();
    StructuralChecks checks;
    checks.hecke_direct_sum = true;     // enforced by hecke_split
    checks.kernel_equals_image = true;  // enforced by build_quadratic
    {
      // I^perp is the (-1)-eigenspace of the dual braiding -q^{-1} c^t.
      const std::size_t n2 = b.dim() * b.dim();
      const auto rev = reversal_permutation(b.dim(), 2);
      Mat p(n2, n2);
      for (std::size_t i = 0; i < n2; ++i) p(rev[i], i) = 1;
      const Mat dual = (Scalar(-1) / q) * (p * operator_on_V2(b).transpose() * p);
      checks.dual_relations_from_dual_braiding = kernel(dual + Mat::identity(n2)) == qd.dual_relations;
    }
    rep.stages_completed.push_back(stage);

    stage = "profile";
    if (rep.cap < 2) throw Error("BadCap", "cap must be at least 2");
    const GradedProfile gp = graded_profile(qd, rep.cap);
    rep.dims_r = gp.dims_r;
    rep.dims_dual = gp.dims_dual;
    rep.gldim = gp.gldim;
    rep.gldim_exceeds_cap = !gp.gldim.has_value();
    if (!gp.gldim) throw Error("CapExceeded", "K_" + std::to_string(rep.cap) + " != 0: global dimension exceeds cap");
    const std::size_t d = *gp.gldim;
    checks.frobenius_dimension_symmetry = true;
    for (std::size_t k = 0; k <= d; ++k)
      if (gp.dims_dual[k] != gp.dims_dual[d - k]) checks.frobenius_dimension_symmetry = false;
    rep.stages_completed.push_back(stage);

    stage = "koszul";
    koszul_check(qd, gp);
    rep.koszul_exact = true;
    rep.hilbert_identity = hilbert_identity(gp);
    rep.stages_completed.push_back(stage);

    stage = "as_regularity";
    const AsRegularityReport as = as_regularity_check(qd, gp);
    rep.as_regular = true;
    rep.as_window_lo = as.window_lo;
    rep.as_window_hi = as.window_hi;
    rep.stages_completed.push_back(stage);

    stage = "frt";
    const ActionFamily af = action_matrices(b);
    checks.rtt = rtt_check(b, af);
    checks.h_linearity = h_linearity_check(b, af);
    checks.relation_stability = stability_check(af, qd.relations, 2);
    checks.koszul_dual_stability = true;
    for (std::size_t m = 1; m <= d; ++m)
      if (!stability_check(af, gp.koszul_dual[m], m)) checks.koszul_dual_stability = false;
    const HomologicalData hd = homological_matrix(af, gp.koszul_dual[d], q, d);
    checks.top_scalar_action = true;  // homological_matrix throws otherwise
    rep.structural = checks;
    rep.quantum_label = hd.quantum_label;
    rep.homological_matrix = hd.matrix;
    rep.stages_completed.push_back(stage);

    stage = "cy";
    rep.phi = phi_automorphism(b, hd);
    rep.is_cy = cy_verdict(*rep.phi, d);
    rep.cy_condition_entrywise = cy_condition_entrywise(b, hd);
    rep.descriptor = dualizing_descriptor(*rep.phi, d);
    rep.caveats.push_back("dualizing complex twist uses phi composed with eps^(d+1)");
    if (*rep.is_cy != *rep.cy_condition_entrywise)
      throw Error("VerdictMismatch", "matrix and entrywise CY criteria disagree");
    rep.stages_completed.push_back(stage);

    stage = "oracle";
    const DualAlgebraTables tables = build_dual_tables(qd, gp);
    rep.tables_associative = tables_associative(tables);
    const FrobeniusForm form = frobenius_form(tables);
    rep.frobenius_nondegenerate = true;
    rep.frobenius_blocks = form.blocks;
    const NakayamaAutomorphism eta = nakayama_bruteforce(tables, form);
    rep.nakayama_bruteforce = eta.per_degree;
    rep.modular_is_counit = modular_facts(tables).modular_is_counit();
    rep.nakayama_formula = nakayama_formula_deg1(b, hd);
    if (d >= 1) rep.nakayama_bruteforce_deg1 = eta.per_degree[1];
    rep.oracle_agreement = d >= 1 && *rep.nakayama_bruteforce_deg1 == *rep.nakayama_formula;
    rep.phi_is_transpose = *rep.phi == rep.nakayama_formula->transpose();
    if (!*rep.oracle_agreement) throw Error("OracleMismatch", "brute-force Nakayama differs from the closed formula");
    if (!*rep.phi_is_transpose) throw Error("OracleMismatch", "phi is not the transpose of the Nakayama matrix");
    rep.stages_completed.push_back(stage);
  } catch (const Error& e) {
    rep.status = e.is_rejection() ? "rejected" : "error";
    rep.failed_stage = stage;
    rep.error_kind = e.kind();
    rep.error_detail = e.detail();
  } catch (const std::exception& e) {
    rep.status = "error";
    rep.failed_stage = stage;
    rep.error_kind = "InternalError";
    rep.error_detail = e.what();
  }
  return rep;
}

json to_json(const AnalysisReport& r) {
  json doc;
  doc["name"] = r.name;
  doc["dimension"] = r.dimension;
  doc["convention"] = to_string(r.convention);
  doc["checksum"] = r.checksum;
  doc["cap"] = r.cap;
  doc["analysis"] = r.status;
  doc["stages_completed"] = r.stages_completed;
  doc["caveats"] = r.caveats;
  if (r.status != "completed")
    doc["error"] = {{"stage", r.failed_stage}, {"kind", r.error_kind}, {"detail", r.error_detail}};

  if (r.braid_equation) {
    json v;
    v["braid_equation"] = *r.braid_equation;
    if (r.invertible) v["invertible"] = *r.invertible;
    if (r.label) v["label"] = to_string(*r.label);
    if (r.rigid) v["rigid"] = *r.rigid;
    if (r.rigidity_routes_agree) v["rigidity_routes_agree"] = *r.rigidity_routes_agree;
    doc["validation"] = v;
  }
  if (r.relations_dim) {
    doc["relations_dim"] = *r.relations_dim;
    doc["dual_relations_dim"] = *r.dual_relations_dim;
  }
  if (!r.dims_r.empty()) {
    doc["dims_R"] = r.dims_r;
    doc["dims_dual"] = r.dims_dual;
    if (r.gldim)
      doc["gldim"] = *r.gldim;
    else
      doc["gldim"] = "exceeds cap";
  }
  if (r.koszul_exact)
    doc["koszul"] = {{"exact", *r.koszul_exact},
                     {"checked_internal_degrees", {0, r.cap}},
                     {"hilbert_identity", *r.hilbert_identity}};
  if (r.as_regular) doc["as_regular"] = {{"verdict", *r.as_regular}, {"window", {r.as_window_lo, r.as_window_hi}}};
  if (r.structural) {
    const auto& s = *r.structural;
    doc["structural"] = {{"hecke_direct_sum", s.hecke_direct_sum},
                         {"kernel_equals_image", s.kernel_equals_image},
                         {"dual_relations_from_dual_braiding", s.dual_relations_from_dual_braiding},
                         {"rtt", s.rtt},
                         {"h_linearity", s.h_linearity},
                         {"relation_stability", s.relation_stability},
                         {"koszul_dual_stability", s.koszul_dual_stability},
                         {"top_scalar_action", s.top_scalar_action},
                         {"frobenius_dimension_symmetry", s.frobenius_dimension_symmetry}};
  }
  if (r.quantum_label) doc["Q"] = to_string(*r.quantum_label);
  if (r.homological_matrix) doc["D"] = matrix_to_json(*r.homological_matrix);
  if (r.phi) doc["phi"] = matrix_to_json(*r.phi);
  if (r.is_cy) {
    doc["is_cy"] = *r.is_cy;
    doc["cy_condition_entrywise"] = *r.cy_condition_entrywise;
    if (*r.is_cy) doc["cy_dimension"] = *r.gldim;
  }
  if (r.descriptor) {
    const auto& d = *r.descriptor;
    doc["descriptor"] = {{"text", d.text},
                         {"twist", matrix_to_json(d.twist)},
                         {"twist_is_identity", d.twist_is_identity},
                         {"shift", d.shift},
                         {"internal_shift", d.internal_shift}};
  }
  if (r.nakayama_formula) doc["nakayama_deg1"] = matrix_to_json(*r.nakayama_formula);
  if (r.nakayama_bruteforce_deg1) doc["nakayama_bruteforce_deg1"] = matrix_to_json(*r.nakayama_bruteforce_deg1);
  if (r.oracle_agreement) doc["oracle_agreement"] = *r.oracle_agreement;
  if (r.phi_is_transpose) doc["phi_is_transpose_of_nakayama"] = *r.phi_is_transpose;
  if (r.frobenius_nondegenerate) doc["frobenius_nondegenerate"] = *r.frobenius_nondegenerate;
  if (r.modular_is_counit) doc["modular_function_is_counit"] = *r.modular_is_counit;
  if (r.tables_associative) doc["dual_tables_associative"] = *r.tables_associative;
  return doc;
}

json oracle_json(const AnalysisReport& r) {
  json doc;
  doc["name"] = r.name;
  doc["analysis"] = r.status;
  if (r.status != "completed")
    doc["error"] = {{"stage", r.failed_stage}, {"kind", r.error_kind}, {"detail", r.error_detail}};
  if (r.gldim) doc["gldim"] = *r.gldim;
  json blocks = json::array();
  for (const auto& b : r.frobenius_blocks) blocks.push_back(matrix_to_json(b));
  doc["frobenius_blocks"] = blocks;
  json eta = json::array();
  for (const auto& m : r.nakayama_bruteforce) eta.push_back(matrix_to_json(m));
  doc["nakayama_bruteforce"] = eta;
  if (r.nakayama_formula) doc["nakayama_formula_deg1"] = matrix_to_json(*r.nakayama_formula);
  if (r.oracle_agreement) doc["oracle_agreement"] = *r.oracle_agreement;
  if (r.phi_is_transpose) doc["phi_is_transpose_of_nakayama"] = *r.phi_is_transpose;
  if (r.modular_is_counit) doc["modular_function_is_counit"] = *r.modular_is_counit;
  if (r.frobenius_nondegenerate) doc["frobenius_nondegenerate"] = *r.frobenius_nondegenerate;
  return doc;
}

namespace {

std::string format_matrix(const Mat& m) {
  std::string out = "[";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (r) out += "; ";
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) out += " ";
      out += to_string(m(r, c));
    }
  }
  return out + "]";
}

template <typename T>
std::string join(const std::vector<T>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

std::string emit_report(const AnalysisReport& r, Format format) {
  if (format == Format::json) return to_json(r).dump(2) + "\n";

  std::vector<std::pair<std::string, std::string>> lines;
  lines.emplace_back("name", r.name);
  lines.emplace_back("dimension", std::to_string(r.dimension));
  lines.emplace_back("convention", to_string(r.convention));
  lines.emplace_back("checksum", r.checksum);
  lines.emplace_back("cap", std::to_string(r.cap));
  if (r.braid_equation) lines.emplace_back("braid equation", yes_no(*r.braid_equation));
  if (r.label) lines.emplace_back("Hecke label q", to_string(*r.label));
  if (r.rigid) lines.emplace_back("rigid", yes_no(*r.rigid));
  if (r.relations_dim) lines.emplace_back("dim I / dim I^perp", std::to_string(*r.relations_dim) + " / " +
                                                                   std::to_string(*r.dual_relations_dim));
  if (!r.dims_r.empty()) {
    lines.emplace_back("dim R_n", join(r.dims_r));
    lines.emplace_back("dim R^!_n", join(r.dims_dual));
    lines.emplace_back("global dimension", r.gldim ? std::to_string(*r.gldim) : "exceeds cap");
  }
  if (r.koszul_exact) lines.emplace_back("Koszul complex exact", yes_no(*r.koszul_exact) + " (t <= " + std::to_string(r.cap) + ")");
  if (r.hilbert_identity) lines.emplace_back("Hilbert series identity", yes_no(*r.hilbert_identity));
  if (r.as_regular)
    lines.emplace_back("AS-regular", yes_no(*r.as_regular) + " (internal degrees " + std::to_string(r.as_window_lo) +
                                         ".." + std::to_string(r.as_window_hi) + ")");
  if (r.quantum_label) lines.emplace_back("quantum label Q", to_string(*r.quantum_label));
  if (r.homological_matrix) lines.emplace_back("homological matrix D", format_matrix(*r.homological_matrix));
  if (r.phi) lines.emplace_back("phi", format_matrix(*r.phi));
  if (r.nakayama_formula) lines.emplace_back("Nakayama (degree 1)", format_matrix(*r.nakayama_formula));
  if (r.oracle_agreement) lines.emplace_back("oracle agreement", yes_no(*r.oracle_agreement));
  if (r.descriptor) lines.emplace_back("rigid dualizing complex", r.descriptor->text + "  twist " + format_matrix(r.descriptor->twist));

  std::size_t width = 0;
  for (const auto& [k, v] : lines) width = std::max(width, k.size());
  std::ostringstream out;
  for (const auto& [k, v] : lines) out << std::left << std::setw(static_cast<int>(width)) << k << " : " << v << "\n";
  if (r.is_cy) {
    out << "CALABI-YAU: " << (*r.is_cy ? "yes (dimension " + std::to_string(*r.gldim) + ")" : std::string("no")) << "\n";
  }
  if (r.status != "completed")
    out << (r.status == "rejected" ? "REJECTED" : "ERROR") << " at stage " << r.failed_stage << ": " << r.error_detail
        << "\n";
  for (const auto& c : r.caveats) out << "note: " << c << "\n";
  return out.str();
}

}  // namespace hecke
