#pragma once

// Brute-force layer for the quadratic dual R^! = T(V*)/(I^perp): explicit
// multiplication tables, the Frobenius form and the Nakayama automorphism.
// Nothing here reuses the FRT action, so agreement with the closed formula
// is an independent check.

#include <cstddef>
#include <memory>
#include <vector>

#include "hecke/frt.hpp"
#include "hecke/nichols.hpp"

namespace hecke {

struct DualAlgebraTables {
  std::size_t d = 0;
  std::shared_ptr<QuadraticQuotient> algebra;
  std::vector<std::size_t> dims;  // dim R^!_k, k = 0..d
  // products[a][b][x * dims[b] + y] = (basis x of degree a) * (basis y of degree b)
  std::vector<std::vector<std::vector<SparseVec>>> products;

  const SparseVec& product(std::size_t a, std::size_t x, std::size_t b, std::size_t y) const {
    return products[a][b][x * dims[b] + y];
  }
  // Word of the top basis element (the integral).
  std::vector<std::size_t> integral_word() const { return algebra->word(d, 0); }
};

// Throws Error("NotFrobeniusShape") unless dim R^!_d = 1 and R^!_{d+1} = 0.
DualAlgebraTables build_dual_tables(const QuadraticData& qd, const GradedProfile& gp);

bool tables_associative(const DualAlgebraTables& t);

struct FrobeniusForm {
  // blocks[k](x, y) = coefficient of the integral in x * y, x of degree k,
  // y of degree d - k.
  std::vector<Mat> blocks;
};

// Throws Error("DegenerateForm") naming the first singular block.
FrobeniusForm frobenius_form(const DualAlgebraTables& t);

struct NakayamaAutomorphism {
  // per_degree[k] column x holds eta(x) in the degree-k basis.
  std::vector<Mat> per_degree;
};

// Solves B(x, y) = B(y, eta(x)) degree by degree and checks that eta is
// multiplicative on every basis product (Error("NotMultiplicative")).
NakayamaAutomorphism nakayama_bruteforce(const DualAlgebraTables& t, const FrobeniusForm& form);

// E(l, i) = -q^{-1} Q sum_{j,k} d_{ik} c^{jk}_{jl}, so that eta(v_i^*) = sum_l E(l, i) v_l^*.
Mat nakayama_formula_deg1(const Braiding& b, const HomologicalData& hd);

struct ModularFacts {
  bool left_annihilates = false;   // x * integral = eps(x) integral
  bool right_annihilates = false;  // integral * x = eps(x) integral
  bool modular_is_counit() const { return left_annihilates && right_annihilates; }
};

// Throws Error("ModularMismatch") if the integral is not two-sided.
ModularFacts modular_facts(const DualAlgebraTables& t);

}  // namespace hecke
