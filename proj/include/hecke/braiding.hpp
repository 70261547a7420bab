#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hecke/linalg.hpp"
#include "hecke/matrix.hpp"

namespace hecke {

// A braided vector space (V, c) with dim V = N, stored as the table
// table(i*N + j, m*N + n) = c^{mn}_{ij}, i.e. c(v_i (x) v_j) = sum c^{mn}_{ij} v_m (x) v_n.
// Indices are 0-based.
class Braiding {
 public:
  Braiding() = default;
  Braiding(std::size_t n, Mat table);

  std::size_t dim() const noexcept { return n_; }
  const Mat& table() const noexcept { return table_; }

  // c^{mn}_{ij}
  const Scalar& coeff(std::size_t m, std::size_t n, std::size_t i, std::size_t j) const {
    return table_(i * n_ + j, m * n_ + n);
  }

  // Sparse image c(v_i (x) v_j) over composite indices m*N + n.
  const SparseVec& image(std::size_t i, std::size_t j) const { return images_[i * n_ + j]; }

  friend bool operator==(const Braiding& a, const Braiding& b) { return a.table_ == b.table_; }

 private:
  std::size_t n_ = 0;
  Mat table_;
  std::vector<SparseVec> images_;
};

// Braiding c(v_i (x) v_j) = q_ij v_j (x) v_i.
Braiding diagonal_braiding(const Mat& qmatrix);

// N^2 x N^2 matrix C whose column (i,j) holds the coordinates of c(v_i (x) v_j).
Mat operator_on_V2(const Braiding& b);

// Applies c to tensor legs (leg, leg+1) of a vector in V^{(x)legs}.
SparseVec apply_on_legs(const Braiding& b, const SparseVec& x, std::size_t leg, std::size_t legs);

bool validate_braid_equation(const Braiding& b);
bool is_invertible(const Braiding& b);

// Returns the Hecke label q with (c - q)(c + 1) = 0. With a hint, verifies it.
// Errors: NotHecke, LabelAmbiguous (c = -id without a hint), BadLabel
// (q = 0 or q = -1).
Scalar verify_label(const Braiding& b, const std::optional<Scalar>& q_hint = std::nullopt);

struct HeckeSplit {
  Subspace ker_plus;  // ker(c + 1)
  Subspace ker_q;     // ker(c - q)
};

HeckeSplit hecke_split(const Braiding& b, const Scalar& q);

// Matrix of c^b : V* (x) V -> V (x) V*, entry at output (n,k), input (i,j)
// equal to c^{in}_{jk}.
Mat rigidity_matrix(const Braiding& b);

// Same map assembled literally as (ev (x) id)(id (x) c (x) id)(id (x) db).
Mat rigidity_matrix_by_composition(const Braiding& b);

bool rigidity_check(const Braiding& b);

}  // namespace hecke
