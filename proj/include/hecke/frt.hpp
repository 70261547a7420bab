#pragma once

#include <cstddef>
#include <vector>

#include "hecke/braiding.hpp"

namespace hecke {

// Generator T^{upper}_{lower} of the FRT bialgebra.
struct Generator {
  std::size_t upper;
  std::size_t lower;
};

// Action of the FRT generators on V: T^n_i . v_j = sum_m c^{mn}_{ij} v_m.
class ActionFamily {
 public:
  ActionFamily() = default;
  explicit ActionFamily(const Braiding& b);

  std::size_t dim() const noexcept { return n_; }
  // N x N matrix of T^{upper}_{lower}; entry (m, j) = c^{m,upper}_{lower,j}.
  const Mat& matrix(Generator g) const { return mats_[g.upper * n_ + g.lower]; }

  // Nonzero entries (out, value) of column `in` of T^{upper}_{lower}.
  const SparseVec& column(Generator g, std::size_t in) const { return cols_[(g.upper * n_ + g.lower) * n_ + in]; }

 private:
  std::size_t n_ = 0;
  std::vector<Mat> mats_;
  std::vector<SparseVec> cols_;
};

ActionFamily action_matrices(const Braiding& b);

// Full matrix of T^{upper}_{lower} on V^{(x)m} through the comultiplication
// Delta(T^j_i) = sum_k T^k_i (x) T^j_k:
//   M_1 = A, M_m(T^j_i) = sum_k kron(A(T^k_i), M_{m-1}(T^j_k)).
Mat diagonal_action(const ActionFamily& af, Generator g, std::size_t m);

// The same operator applied to one vector by contracting leg by leg; never
// forms the N^m x N^m matrix.
SparseVec apply_diagonal(const ActionFamily& af, Generator g, std::size_t m, const SparseVec& w);

// sum_{k,l} c^{kl}_{ij} T^m_k T^n_l == sum_{k,l} T^k_i T^l_j c^{mn}_{kl} on V.
bool rtt_check(const Braiding& b, const ActionFamily& af);

// c commutes with the diagonal action of every generator on V (x) V.
bool h_linearity_check(const Braiding& b, const ActionFamily& af);

// Every generator maps the subspace of V^{(x)m} into itself.
bool stability_check(const ActionFamily& af, const Subspace& s, std::size_t m);

struct HomologicalData {
  std::size_t d = 0;
  Scalar q;
  Scalar quantum_label;  // Q = (-q^{-1})^d
  Mat matrix;            // D, D(i, j) = hdet(T^i_j)
  SparseVec top_vector;  // spanning vector of K_d
};

Scalar quantum_label(const Scalar& q, std::size_t d);

// D(i, j) is the scalar by which T^i_j acts on the line K_d.
HomologicalData homological_matrix(const ActionFamily& af, const Subspace& top, const Scalar& q, std::size_t d);

}  // namespace hecke
