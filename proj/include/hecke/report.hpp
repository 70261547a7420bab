#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hecke/cy.hpp"
#include "hecke/frobenius.hpp"
#include "hecke/nichols.hpp"

namespace hecke {

enum class Convention { standard, transpose };
enum class Format { json, text };

Convention parse_convention(const std::string& s);
std::string to_string(Convention c);

// A braiding as written in an input document. braiding(row, col) is
// c^{mn}_{ij} with row = (i, j), col = (m, n) under the standard convention;
// the transpose convention swaps the roles of rows and columns.
struct InputSpec {
  std::string name;
  std::size_t dimension = 0;
  std::optional<Scalar> label;
  Mat braiding;
  std::optional<std::size_t> cap;
  std::optional<Convention> convention;
};

// Errors: ParseError (with line), DimensionMismatch, BadScalar, BadInput,
// BadFamilyParams, UnknownBuiltin.
InputSpec parse_input(std::istream& in);
InputSpec parse_input_file(const std::string& path);  // "-" reads stdin
InputSpec parse_input_json(const nlohmann::json& doc);
nlohmann::json to_json(const InputSpec& spec);

// Built-in families: "diagonal" (params {"qmatrix": [[...]]}), "example2",
// "trivial1".
InputSpec builtin(const std::string& name, const nlohmann::json& params = nlohmann::json::object());

Braiding to_braiding(const InputSpec& spec, Convention convention);

struct StructuralChecks {
  bool hecke_direct_sum = false;
  bool kernel_equals_image = false;
  bool dual_relations_from_dual_braiding = false;
  bool rtt = false;
  bool h_linearity = false;
  bool relation_stability = false;
  bool koszul_dual_stability = false;
  bool top_scalar_action = false;
  bool frobenius_dimension_symmetry = false;
};

struct AnalysisReport {
  std::string name;
  std::size_t dimension = 0;
  Convention convention = Convention::standard;
  std::string checksum;
  std::size_t cap = 0;

  std::string status = "completed";  // completed | rejected | error
  std::string failed_stage;
  std::string error_kind;
  std::string error_detail;
  std::vector<std::string> stages_completed;
  std::vector<std::string> caveats;

  // validate
  std::optional<bool> braid_equation, invertible, rigid, rigidity_routes_agree;
  std::optional<Scalar> label;
  // quadratic / profile
  std::optional<std::size_t> relations_dim, dual_relations_dim;
  std::vector<std::size_t> dims_r, dims_dual;
  std::optional<std::size_t> gldim;
  bool gldim_exceeds_cap = false;
  // koszul / AS
  std::optional<bool> koszul_exact, hilbert_identity, as_regular;
  long as_window_lo = 0, as_window_hi = 0;
  // frt
  std::optional<StructuralChecks> structural;
  std::optional<Scalar> quantum_label;
  std::optional<Mat> homological_matrix;
  // cy
  std::optional<Mat> phi;
  std::optional<bool> is_cy, cy_condition_entrywise;
  std::optional<DualizingDescriptor> descriptor;
  // oracle
  std::optional<Mat> nakayama_formula, nakayama_bruteforce_deg1;
  std::vector<Mat> nakayama_bruteforce, frobenius_blocks;
  std::optional<bool> oracle_agreement, frobenius_nondegenerate, modular_is_counit, phi_is_transpose,
      tables_associative;

  int exit_code() const;
};

enum class Depth { validate, full };

struct AnalyzeOptions {
  std::optional<std::size_t> cap;
  std::optional<Convention> convention;
  Depth depth = Depth::full;
};

// Runs validate -> quadratic -> profile -> koszul -> as_regularity -> frt ->
// cy -> oracle. Stage failures are recorded in the report instead of thrown.
AnalysisReport analyze(const InputSpec& spec, const AnalyzeOptions& options = {});

nlohmann::json to_json(const AnalysisReport& report);
nlohmann::json oracle_json(const AnalysisReport& report);
std::string emit_report(const AnalysisReport& report, Format format);

// FNV-1a over the canonical serialization of the braiding table.
std::string checksum(const InputSpec& spec);

}  // namespace hecke
