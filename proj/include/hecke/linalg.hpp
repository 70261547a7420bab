#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "hecke/elimination.hpp"
#include "hecke/matrix.hpp"
#include "hecke/sparse.hpp"

namespace hecke {

// A subspace of k^n held as the rows of its reduced row echelon basis.
// The representation is canonical: two Subspaces are equal iff their bases
// are identical.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient = 0) : ambient_(ambient) {}

  static Subspace span(std::size_t ambient, std::vector<SparseVec> vectors);
  // Rows of `m` are the spanning vectors.
  static Subspace row_space(const Mat& m);
  static Subspace whole(std::size_t ambient);

  std::size_t ambient_dim() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return basis_.size(); }
  bool is_zero() const noexcept { return basis_.empty(); }
  bool is_whole() const noexcept { return basis_.size() == ambient_; }

  const std::vector<SparseVec>& basis() const noexcept { return basis_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
  Mat basis_matrix() const;

  // Coordinates of v with respect to basis(), or nullopt if v is not in the
  // subspace.
  std::optional<std::vector<Scalar>> coordinates(const SparseVec& v) const;
  bool contains(const SparseVec& v) const { return coordinates(v).has_value(); }
  bool contains(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t ambient_ = 0;
  std::vector<SparseVec> basis_;
  std::vector<std::size_t> pivots_;
};

struct RrefResult {
  std::size_t rank = 0;
  Mat echelon;
  Subspace kernel;  // column vectors x with M x = 0
};

RrefResult rref(const Mat& m);

// Null space of a sparse operator given by its rows (each of length `cols`).
Subspace kernel_of_rows(const std::vector<SparseVec>& rows, std::size_t cols);

Subspace column_space(const Mat& m);
Subspace kernel(const Mat& m);

// Intersection of subspaces sharing one ambient space; the empty list gives
// the whole space of dimension `ambient`.
Subspace intersect(std::span<const Subspace> spaces, std::size_t ambient);
Subspace intersect(const Subspace& a, const Subspace& b);
Subspace sum(const Subspace& a, const Subspace& b);

// Covectors F with F(P w) = 0 for all w in W, where (P w)[pairing[i]] = w[i].
Subspace annihilator(const Subspace& w, std::span<const std::size_t> pairing);

// Permutation of composite indices of V^{(x)legs} (dim V = n) that reverses
// the order of the tensor legs.
std::vector<std::size_t> reversal_permutation(std::size_t n, std::size_t legs);
std::vector<std::size_t> identity_permutation(std::size_t size);

using LinearMap = std::function<SparseVec(const SparseVec&)>;

// lambda with M w = lambda w on W. Throws Error("NotInvariant") when
// M W is not inside W, Error("NotScalar") when M|W is not scalar.
Scalar acts_as_scalar(const Mat& m, const Subspace& w);
Scalar acts_as_scalar(const LinearMap& m, const Subspace& w);

SparseVec apply(const Mat& m, const SparseVec& x);

}  // namespace hecke

namespace hecke {

// X with A X = B for square invertible A. Throws Error("Singular") otherwise.
Mat solve(const Mat& a, const Mat& b);

}  // namespace hecke
