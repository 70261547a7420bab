#include "hecke/frt.hpp"

#include <stdexcept>

#include "hecke/error.hpp"

namespace hecke {

ActionFamily::ActionFamily(const Braiding& b) : n_(b.dim()) {
  mats_.reserve(n_ * n_);
  for (std::size_t upper = 0; upper < n_; ++upper)
    for (std::size_t lower = 0; lower < n_; ++lower) {
      Mat a(n_, n_);
      for (std::size_t m = 0; m < n_; ++m)
        for (std::size_t j = 0; j < n_; ++j) a(m, j) = b.coeff(m, upper, lower, j);
      mats_.push_back(std::move(a));
    }
  cols_.resize(n_ * n_ * n_);
  for (std::size_t g = 0; g < n_ * n_; ++g)
    for (std::size_t in = 0; in < n_; ++in)
      for (std::size_t out = 0; out < n_; ++out)
        if (sgn(mats_[g](out, in)) != 0) cols_[g * n_ + in].push_back({out, mats_[g](out, in)});
}

ActionFamily action_matrices(const Braiding& b) { return ActionFamily(b); }

Mat diagonal_action(const ActionFamily& af, Generator g, std::size_t m) {
  if (m == 0) throw std::invalid_argument("diagonal_action: degree must be positive");
  if (m == 1) return af.matrix(g);
  Mat out;
  for (std::size_t k = 0; k < af.dim(); ++k) {
    Mat term = kron(af.matrix({k, g.lower}), diagonal_action(af, {g.upper, k}, m - 1));
    if (k == 0)
      out = std::move(term);
    else
      out += term;
  }
  return out;
}

SparseVec apply_diagonal(const ActionFamily& af, Generator g, std::size_t m, const SparseVec& w) {
  const std::size_t n = af.dim();
  std::size_t total = 1;
  for (std::size_t i = 0; i < m; ++i) total *= n;
  // State (k, idx) packed as k * total + idx: k is the running lower index
  // after the legs already processed.
  SparseVec state;
  state.reserve(w.size());
  for (const auto& e : w) state.push_back({g.lower * total + e.col, e.val});
  std::size_t stride = total;  // size of the suffix starting at the current leg
  for (std::size_t leg = 0; leg < m; ++leg) {
    stride /= n;
    const bool last = leg + 1 == m;
    std::vector<Entry> terms;
    for (const auto& e : state) {
      const std::size_t k = e.col / total;
      const std::size_t idx = e.col % total;
      const std::size_t in = (idx / stride) % n;
      const std::size_t base = idx - in * stride;
      const std::size_t k_lo = last ? g.upper : 0;
      const std::size_t k_hi = last ? g.upper + 1 : n;
      for (std::size_t next = k_lo; next < k_hi; ++next)
        for (const auto& c : af.column({next, k}, in))
          terms.push_back({next * total + base + c.col * stride, c.val * e.val});
    }
    state = collect(std::move(terms));
  }
  for (auto& e : state) e.col %= total;
  return state;
}

bool rtt_check(const Braiding& b, const ActionFamily& af) {
  const std::size_t n = b.dim();
  auto a = [&](std::size_t upper, std::size_t lower) -> const Mat& { return af.matrix({upper, lower}); };
  // prod[(u1, l1, u2, l2)] = A(u1, l1) * A(u2, l2)
  std::vector<Mat> prod(n * n * n * n);
  for (std::size_t u1 = 0; u1 < n; ++u1)
    for (std::size_t l1 = 0; l1 < n; ++l1)
      for (std::size_t u2 = 0; u2 < n; ++u2)
        for (std::size_t l2 = 0; l2 < n; ++l2)
          prod[((u1 * n + l1) * n + u2) * n + l2] = a(u1, l1) * a(u2, l2);
  auto p = [&](std::size_t u1, std::size_t l1, std::size_t u2, std::size_t l2) -> const Mat& {
    return prod[((u1 * n + l1) * n + u2) * n + l2];
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t m = 0; m < n; ++m)
        for (std::size_t nn = 0; nn < n; ++nn) {
          Mat lhs(n, n), rhs(n, n);
          for (std::size_t k = 0; k < n; ++k)
            for (std::size_t l = 0; l < n; ++l) {
              if (const Scalar& x = b.coeff(k, l, i, j); sgn(x) != 0) lhs += x * p(m, k, nn, l);
              if (const Scalar& y = b.coeff(m, nn, k, l); sgn(y) != 0) rhs += y * p(k, i, l, j);
            }
          if (lhs != rhs) return false;
        }
  return true;
}

bool h_linearity_check(const Braiding& b, const ActionFamily& af) {
  const std::size_t n = b.dim();
  for (std::size_t upper = 0; upper < n; ++upper)
    for (std::size_t lower = 0; lower < n; ++lower)
      for (std::size_t idx = 0; idx < n * n; ++idx) {
        const SparseVec e{{idx, Scalar(1)}};
        SparseVec act_then_braid = apply_on_legs(b, apply_diagonal(af, {upper, lower}, 2, e), 0, 2);
        SparseVec braid_then_act = apply_diagonal(af, {upper, lower}, 2, apply_on_legs(b, e, 0, 2));
        if (act_then_braid != braid_then_act) return false;
      }
  return true;
}

bool stability_check(const ActionFamily& af, const Subspace& s, std::size_t m) {
  const std::size_t n = af.dim();
  for (std::size_t upper = 0; upper < n; ++upper)
    for (std::size_t lower = 0; lower < n; ++lower)
      for (const auto& v : s.basis())
        if (!s.contains(apply_diagonal(af, {upper, lower}, m, v))) return false;
  return true;
}

Scalar quantum_label(const Scalar& q, std::size_t d) {
  if (sgn(q) == 0) throw Error("BadLabel", "label q = 0");
  return power(Scalar(-1) / q, static_cast<long>(d));
}

HomologicalData homological_matrix(const ActionFamily& af, const Subspace& top, const Scalar& q, std::size_t d) {
  if (top.dim() != 1) throw Error("NotFrobeniusShape", "top Koszul dual component is not a line");
  const std::size_t n = af.dim();
  HomologicalData hd;
  hd.d = d;
  hd.q = q;
  hd.quantum_label = quantum_label(q, d);
  hd.top_vector = top.basis().front();
  hd.matrix = Mat(n, n);
  if (d == 0) {
    // K_0 = k; each generator acts through its counit.
    hd.matrix = Mat::identity(n);
    return hd;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      hd.matrix(i, j) = acts_as_scalar(
          [&, i, j](const SparseVec& v) { return apply_diagonal(af, {i, j}, d, v); }, top);
  return hd;
}

}  // namespace hecke
