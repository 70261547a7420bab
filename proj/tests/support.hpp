#pragma once

#include <string>
#include <vector>

#include "hecke/braiding.hpp"
#include "hecke/linalg.hpp"
#include "hecke/nichols.hpp"
#include "hecke/report.hpp"

namespace testing {

using namespace hecke;

struct NamedCase {
  std::string name;
  InputSpec spec;
};

InputSpec diagonal(const nlohmann::json& qmatrix);

// trivial1, QP2(1), QP2(2), QP2(1/3), a mixed QP3 and example2.
std::vector<NamedCase> oracle_suite();

// Every q-matrix of size n with off-diagonal entries from {1, 2, 1/2, 3, 1/3}
// and q_ji = 1/q_ij.
std::vector<Mat> diagonal_family(std::size_t n);

std::size_t ipow(std::size_t base, std::size_t e);

// v in V^{(x)k} placed as V^{(x)a} (x) v (x) V^{(x)b}, one vector per pair of
// outer basis monomials.
std::vector<SparseVec> embed(const SparseVec& v, std::size_t n, std::size_t k, std::size_t a, std::size_t b);

// J_n = sum_a V^a (x) I (x) V^{n-2-a}, straight from the definition.
Subspace ideal_by_definition(const Subspace& rel, std::size_t n, std::size_t deg);

// K_n = intersection_a V^a (x) I (x) V^{n-2-a}.
Subspace koszul_by_definition(const Subspace& rel, std::size_t n, std::size_t deg);

// Nakayama matrix of T(V*)/(I^perp) in degree 1, computed densely from a
// top functional on V^{(x)d}. Column i holds eta(v_i^*).
Mat nakayama_by_functional(const Subspace& dual_rel, std::size_t n, std::size_t d);

// Runs the validation and structural checks on a table; true if all pass.
bool all_checks_pass(std::size_t n, const Mat& table);

// Number of single-coefficient mutations (entry += 1) that pass every check.
std::size_t mutation_survivors(const InputSpec& spec);

// The six relations printed for the 4-dimensional example, as v_a v_b - v_c v_d.
Subspace example2_relations();

}  // namespace testing
