#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "hecke/linalg.hpp"

namespace hecke {

// Normal forms for a quadratic algebra T(V)/(W), dim V = N, W inside V (x) V.
//
// The basis of each graded piece is the set of monomials that are not pivots
// of the reduced echelon form of the ideal component J_n (composite indices
// in lexicographic order). It is built degree by degree:
//
//   J_{n+1} = J_n (x) V + V^{(x)(n-1)} (x) W,
//
// so only the image of R_{n-1} (x) W inside R_n (x) V has to be eliminated.
// Projection along J_n (x) V followed by that elimination lands on the same
// canonical complement as reducing against J_{n+1} directly.
class QuadraticQuotient {
 public:
  QuadraticQuotient(std::size_t generators, Subspace relations);

  // Ensures graded pieces 0..degree are available.
  void extend_to(std::size_t degree);

  std::size_t generators() const noexcept { return n_; }
  std::size_t computed_degree() const noexcept { return basis_.size() - 1; }
  std::size_t dim(std::size_t degree) const { return basis_.at(degree).size(); }
  const Subspace& relations() const noexcept { return relations_; }

  // Composite indices (base N) of the basis monomials of a degree, ascending.
  const std::vector<std::size_t>& basis(std::size_t degree) const { return basis_.at(degree); }
  std::vector<std::size_t> word(std::size_t degree, std::size_t basis_index) const;

  // Normal form of (basis element b of `degree`) * v_x over the basis of degree + 1.
  const SparseVec& times_generator(std::size_t degree, std::size_t b, std::size_t x) const {
    return right_mult_.at(degree)[b * n_ + x];
  }

  SparseVec right_multiply(std::size_t degree, const SparseVec& a, std::size_t x) const;
  SparseVec left_multiply(std::size_t x, std::size_t degree, const SparseVec& a) const;
  SparseVec normal_form(std::span<const std::size_t> word) const;
  // a in degree da times b in degree db.
  SparseVec multiply(std::size_t da, const SparseVec& a, std::size_t db, const SparseVec& b) const;

  // J_n materialized inside V^{(x)n}; meant for small n.
  Subspace ideal_component(std::size_t degree) const;

 private:
  void extend_once();

  std::size_t n_;
  Subspace relations_;
  std::vector<std::vector<std::size_t>> basis_;
  std::vector<std::vector<SparseVec>> right_mult_;
};

}  // namespace hecke
