#include "hecke/linalg.hpp"

#include <algorithm>
#include <stdexcept>

#include "hecke/error.hpp"

namespace hecke {

Subspace Subspace::span(std::size_t ambient, std::vector<SparseVec> vectors) {
  for (const auto& v : vectors)
    if (!v.empty() && v.back().col >= ambient) throw std::out_of_range("vector outside ambient space");
  Echelon e = echelonize(std::move(vectors), ambient, true);
  Subspace s(ambient);
  s.basis_ = std::move(e.rows);
  s.pivots_ = std::move(e.pivots);
  return s;
}

Subspace Subspace::row_space(const Mat& m) {
  std::vector<SparseVec> rows;
  rows.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(to_sparse(m.row(r)));
  return span(m.cols(), std::move(rows));
}

Subspace Subspace::whole(std::size_t ambient) {
  Subspace s(ambient);
  s.basis_.reserve(ambient);
  for (std::size_t i = 0; i < ambient; ++i) {
    s.basis_.push_back({{i, Scalar(1)}});
    s.pivots_.push_back(i);
  }
  return s;
}

Mat Subspace::basis_matrix() const {
  Mat m(basis_.size(), ambient_);
  for (std::size_t r = 0; r < basis_.size(); ++r)
    for (const auto& e : basis_[r]) m(r, e.col) = e.val;
  return m;
}

std::optional<std::vector<Scalar>> Subspace::coordinates(const SparseVec& v) const {
  // In RREF the coordinate on basis row r is the entry of v at pivot r.
  std::vector<Scalar> coords(basis_.size());
  SparseVec residual = v;
  for (std::size_t r = 0; r < basis_.size(); ++r) {
    if (const Scalar* x = find(v, pivots_[r])) {
      coords[r] = *x;
      Scalar f = -*x;
      axpy(residual, f, basis_[r]);
    }
  }
  if (!residual.empty()) return std::nullopt;
  return coords;
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) return false;
  for (const auto& v : other.basis_)
    if (!contains(v)) return false;
  return true;
}

Subspace kernel_of_rows(const std::vector<SparseVec>& rows, std::size_t cols) {
  Echelon e = echelonize(rows, cols, true);
  std::vector<char> is_pivot(cols, 0);
  for (auto p : e.pivots) is_pivot[p] = 1;
  // Free column f contributes e_f - sum_r E[r][f] e_{pivot r}.
  std::vector<std::vector<Entry>> terms(cols);
  for (std::size_t f = 0; f < cols; ++f)
    if (!is_pivot[f]) terms[f].push_back({f, Scalar(1)});
  for (std::size_t r = 0; r < e.rows.size(); ++r)
    for (std::size_t k = 1; k < e.rows[r].size(); ++k) {
      const auto& entry = e.rows[r][k];
      terms[entry.col].push_back({e.pivots[r], -entry.val});
    }
  std::vector<SparseVec> vectors;
  for (std::size_t f = 0; f < cols; ++f)
    if (!is_pivot[f]) vectors.push_back(collect(std::move(terms[f])));
  return Subspace::span(cols, std::move(vectors));
}

RrefResult rref(const Mat& m) {
  std::vector<SparseVec> rows;
  rows.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(to_sparse(m.row(r)));
  RrefResult out;
  out.kernel = kernel_of_rows(rows, m.cols());
  Echelon e = echelonize(std::move(rows), m.cols(), true);
  out.rank = e.rank();
  out.echelon = Mat(m.rows(), m.cols());
  for (std::size_t r = 0; r < e.rows.size(); ++r)
    for (const auto& entry : e.rows[r]) out.echelon(r, entry.col) = entry.val;
  return out;
}

Subspace column_space(const Mat& m) { return Subspace::row_space(m.transpose()); }

Subspace kernel(const Mat& m) {
  std::vector<SparseVec> rows;
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(to_sparse(m.row(r)));
  return kernel_of_rows(rows, m.cols());
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw std::invalid_argument("intersect: ambient mismatch");
  if (a.is_zero() || b.is_zero()) return Subspace(a.ambient_dim());
  if (a.is_whole()) return b;
  if (b.is_whole()) return a;
  // sum_i x_i a_i = sum_j y_j b_j  <=>  (x, -y) in the left kernel of [A; B].
  std::vector<SparseVec> stacked = a.basis();
  stacked.insert(stacked.end(), b.basis().begin(), b.basis().end());
  auto relations = left_kernel(stacked, a.ambient_dim());
  std::vector<SparseVec> vectors;
  vectors.reserve(relations.size());
  for (const auto& rel : relations) {
    std::vector<Entry> terms;
    for (const auto& e : rel) {
      if (e.col >= a.dim()) break;
      for (const auto& x : a.basis()[e.col]) terms.push_back({x.col, e.val * x.val});
    }
    vectors.push_back(collect(std::move(terms)));
  }
  return Subspace::span(a.ambient_dim(), std::move(vectors));
}

Subspace intersect(std::span<const Subspace> spaces, std::size_t ambient) {
  if (spaces.empty()) return Subspace::whole(ambient);
  Subspace acc = spaces.front();
  for (std::size_t i = 1; i < spaces.size() && !acc.is_zero(); ++i) acc = intersect(acc, spaces[i]);
  return acc;
}

Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw std::invalid_argument("sum: ambient mismatch");
  std::vector<SparseVec> vectors = a.basis();
  vectors.insert(vectors.end(), b.basis().begin(), b.basis().end());
  return Subspace::span(a.ambient_dim(), std::move(vectors));
}

Subspace annihilator(const Subspace& w, std::span<const std::size_t> pairing) {
  const std::size_t n = w.ambient_dim();
  if (pairing.size() != n) throw std::invalid_argument("annihilator: pairing size mismatch");
  // F(Pw) = sum_i F[p(i)] w[i]; G := F o p ranges over ker(W).
  Subspace g = kernel_of_rows(w.basis(), n);
  std::vector<SparseVec> vectors;
  vectors.reserve(g.dim());
  for (const auto& v : g.basis()) {
    std::vector<Entry> terms;
    for (const auto& e : v) terms.push_back({pairing[e.col], e.val});
    vectors.push_back(collect(std::move(terms)));
  }
  return Subspace::span(n, std::move(vectors));
}

std::vector<std::size_t> reversal_permutation(std::size_t n, std::size_t legs) {
  std::size_t total = 1;
  for (std::size_t i = 0; i < legs; ++i) total *= n;
  std::vector<std::size_t> p(total);
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::size_t rest = idx, rev = 0;
    for (std::size_t i = 0; i < legs; ++i) {
      rev = rev * n + rest % n;
      rest /= n;
    }
    p[idx] = rev;
  }
  return p;
}

std::vector<std::size_t> identity_permutation(std::size_t size) {
  std::vector<std::size_t> p(size);
  for (std::size_t i = 0; i < size; ++i) p[i] = i;
  return p;
}

SparseVec apply(const Mat& m, const SparseVec& x) {
  std::vector<Entry> terms;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Scalar acc;
    for (const auto& e : x)
      if (sgn(m(r, e.col)) != 0) acc += m(r, e.col) * e.val;
    if (sgn(acc) != 0) terms.push_back({r, acc});
  }
  return terms;
}

Scalar acts_as_scalar(const LinearMap& m, const Subspace& w) {
  if (w.is_zero()) throw std::invalid_argument("acts_as_scalar: zero subspace");
  std::optional<Scalar> lambda;
  for (std::size_t r = 0; r < w.dim(); ++r) {
    const SparseVec& v = w.basis()[r];
    SparseVec image = m(v);
    if (!w.contains(image)) throw Error("NotInvariant", "image leaves the subspace");
    const Scalar* at_pivot = find(image, w.pivots()[r]);
    Scalar l = at_pivot ? *at_pivot : Scalar(0);
    SparseVec expected = v;
    scale(expected, l);
    if (image != expected) throw Error("NotScalar", "restriction is not a multiple of the identity");
    if (lambda && *lambda != l) throw Error("NotScalar", "basis vectors scale differently");
    lambda = l;
  }
  return *lambda;
}

Scalar acts_as_scalar(const Mat& m, const Subspace& w) {
  if (m.rows() != w.ambient_dim() || m.cols() != w.ambient_dim())
    throw std::invalid_argument("acts_as_scalar: shape mismatch");
  return acts_as_scalar([&m](const SparseVec& x) { return apply(m, x); }, w);
}

}  // namespace hecke

namespace hecke {

Mat solve(const Mat& a, const Mat& b) {
  const std::size_t n = a.rows();
  if (!a.is_square() || b.rows() != n) throw std::invalid_argument("solve: shape mismatch");
  std::vector<SparseVec> rows;
  rows.reserve(n);
  for (std::size_t r = 0; r < n; ++r) {
    SparseVec row = to_sparse(a.row(r));
    for (const auto& e : to_sparse(b.row(r))) row.push_back({n + e.col, e.val});
    rows.push_back(std::move(row));
  }
  Echelon e = echelonize(std::move(rows), n + b.cols(), true);
  if (e.rank() < n || (n > 0 && e.pivots[n - 1] != n - 1)) throw Error("Singular", "matrix is not invertible");
  Mat x(n, b.cols());
  for (std::size_t r = 0; r < n; ++r)
    for (const auto& entry : e.rows[r])
      if (entry.col >= n) x(r, entry.col - n) = entry.val;
  return x;
}

}  // namespace hecke
