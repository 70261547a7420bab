#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "hecke/braiding.hpp"
#include "hecke/quotient.hpp"

namespace hecke {

// Quadratic presentation of the Nichols algebra R = T(V)/(I), I = ker(c + 1),
// and of its quadratic dual R^! = T(V*)/(I^perp). I^perp uses the reversed
// pairing (f_2 (x) f_1)(x_1 (x) x_2) = f_1(x_1) f_2(x_2); covector coordinate
// a*N + b stands for v_a^* (x) v_b^*.
struct QuadraticData {
  std::size_t n = 0;
  Scalar q;
  Subspace relations;       // I
  Subspace dual_relations;  // I^perp
};

QuadraticData build_quadratic(const Braiding& b, const Scalar& q);

// Largest n with N^n <= 30000, at least 4; 12 for N = 1.
std::size_t default_cap(std::size_t n);

struct GradedProfile {
  std::size_t cap = 0;
  std::vector<std::size_t> dims_r;     // dim R_n, n = 0..cap
  std::vector<std::size_t> dims_dual;  // dim R^!_n = dim K_n
  std::vector<Subspace> koszul_dual;   // K_n inside V^{(x)n}, n = 0..cap
  std::shared_ptr<QuadraticQuotient> algebra;  // normal forms of R (J_n implicit)
  std::optional<std::size_t> gldim;            // nullopt: exceeds cap

  // J_n inside V^{(x)n}, materialized on demand.
  Subspace ideal_component(std::size_t n) const { return algebra->ideal_component(n); }
};

GradedProfile graded_profile(const QuadraticData& qd, std::size_t cap);

// Coordinates of each basis vector of K_m after splitting off the first
// tensor leg: split[r][x] is the K_{m-1}-coordinate vector of the slice
// w_x, where w_r = sum_x v_x (x) w_x.
std::vector<std::vector<SparseVec>> left_split(const GradedProfile& gp, std::size_t m);

struct ChainCheck {
  long internal_degree = 0;
  std::size_t position = 0;
  std::size_t chain_dim = 0;
  std::size_t homology = 0;
};

struct KoszulReport {
  std::size_t max_degree = 0;
  std::vector<ChainCheck> table;  // one row per (t, m)
};

// Exactness of R_{t-m} (x) K_m for every internal degree t <= cap; throws
// Error("NotExact") naming the first failing (t, m), Error("NotComplex") if
// d o d != 0.
KoszulReport koszul_check(const QuadraticData& qd, const GradedProfile& gp);

// sum_k (-1)^k dims_dual[k] t^k * sum_n dims_r[n] t^n == 1 mod t^{cap+1}
bool hilbert_identity(const GradedProfile& gp);

struct AsRegularityReport {
  long window_lo = 0;  // internal degrees covered
  long window_hi = 0;
  std::vector<ChainCheck> table;
};

// Cohomology of Hom_R(R (x) K_., R) = R^!_. (x) R, graded by tau = m - j for
// the component R^!_m (x) R_j. Expects zero cohomology except a line at
// position d, tau = d. Throws Error("NotASRegular").
AsRegularityReport as_regularity_check(const QuadraticData& qd, const GradedProfile& gp);

}  // namespace hecke
