#include "hecke/quotient.hpp"

#include <stdexcept>
#include <unordered_map>

namespace hecke {

QuadraticQuotient::QuadraticQuotient(std::size_t generators, Subspace relations)
    : n_(generators), relations_(std::move(relations)) {
  if (relations_.ambient_dim() != n_ * n_) throw std::invalid_argument("relations must live in V (x) V");
  basis_.push_back({0});
  basis_.emplace_back();
  for (std::size_t x = 0; x < n_; ++x) basis_[1].push_back(x);
  right_mult_.emplace_back();
  for (std::size_t x = 0; x < n_; ++x) right_mult_[0].push_back({{x, Scalar(1)}});
}

void QuadraticQuotient::extend_to(std::size_t degree) {
  while (computed_degree() < degree) extend_once();
}

void QuadraticQuotient::extend_once() {
  const std::size_t deg = computed_degree();  // build deg + 1 from deg and deg - 1
  const std::size_t dim_prev = basis_[deg - 1].size();
  const std::size_t dim_cur = basis_[deg].size();
  const auto& rel = relations_.basis();

  // Image of R_{deg-1} (x) W in R_deg (x) V, column index b * N + y.
  std::vector<SparseVec> rows(dim_prev * rel.size());
#pragma omp parallel for schedule(dynamic, 8) if (dim_prev > 16)
  for (std::size_t b = 0; b < dim_prev; ++b) {
    for (std::size_t r = 0; r < rel.size(); ++r) {
      std::vector<Entry> terms;
      for (const auto& e : rel[r]) {
        const std::size_t x = e.col / n_, y = e.col % n_;
        for (const auto& t : right_mult_[deg - 1][b * n_ + x]) terms.push_back({t.col * n_ + y, t.val * e.val});
      }
      rows[b * rel.size() + r] = collect(std::move(terms));
    }
  }
  const std::size_t ambient = dim_cur * n_;
  Echelon ech = echelonize(std::move(rows), ambient, true);

  std::vector<std::size_t> pivot_row(ambient, SIZE_MAX);
  for (std::size_t r = 0; r < ech.pivots.size(); ++r) pivot_row[ech.pivots[r]] = r;
  std::vector<std::size_t> new_index(ambient, SIZE_MAX);
  std::vector<std::size_t> next_basis;
  for (std::size_t col = 0; col < ambient; ++col) {
    if (pivot_row[col] != SIZE_MAX) continue;
    new_index[col] = next_basis.size();
    next_basis.push_back(basis_[deg][col / n_] * n_ + col % n_);
  }

  std::vector<SparseVec> mult(ambient);
  for (std::size_t col = 0; col < ambient; ++col) {
    if (pivot_row[col] == SIZE_MAX) {
      mult[col] = {{new_index[col], Scalar(1)}};
      continue;
    }
    const SparseVec& row = ech.rows[pivot_row[col]];
    SparseVec nf;
    nf.reserve(row.size() - 1);
    for (std::size_t k = 1; k < row.size(); ++k) nf.push_back({new_index[row[k].col], -row[k].val});
    mult[col] = std::move(nf);
  }
  right_mult_.push_back(std::move(mult));
  basis_.push_back(std::move(next_basis));
}

std::vector<std::size_t> QuadraticQuotient::word(std::size_t degree, std::size_t basis_index) const {
  std::vector<std::size_t> w(degree);
  std::size_t idx = basis_.at(degree).at(basis_index);
  for (std::size_t k = degree; k-- > 0;) {
    w[k] = idx % n_;
    idx /= n_;
  }
  return w;
}

SparseVec QuadraticQuotient::right_multiply(std::size_t degree, const SparseVec& a, std::size_t x) const {
  if (degree >= right_mult_.size()) throw std::out_of_range("right_multiply beyond computed degree");
  std::vector<Entry> terms;
  for (const auto& e : a)
    for (const auto& t : right_mult_[degree][e.col * n_ + x]) terms.push_back({t.col, t.val * e.val});
  return collect(std::move(terms));
}

SparseVec QuadraticQuotient::normal_form(std::span<const std::size_t> w) const {
  SparseVec acc{{0, Scalar(1)}};
  for (std::size_t k = 0; k < w.size() && !acc.empty(); ++k) acc = right_multiply(k, acc, w[k]);
  return acc;
}

SparseVec QuadraticQuotient::left_multiply(std::size_t x, std::size_t degree, const SparseVec& a) const {
  std::vector<Entry> terms;
  for (const auto& e : a) {
    std::vector<std::size_t> w = word(degree, e.col);
    w.insert(w.begin(), x);
    for (const auto& t : normal_form(w)) terms.push_back({t.col, t.val * e.val});
  }
  return collect(std::move(terms));
}

SparseVec QuadraticQuotient::multiply(std::size_t da, const SparseVec& a, std::size_t db,
                                      const SparseVec& b) const {
  std::vector<Entry> terms;
  for (const auto& e : b) {
    SparseVec acc = a;
    std::size_t deg = da;
    for (std::size_t letter : word(db, e.col)) {
      if (acc.empty()) break;
      acc = right_multiply(deg++, acc, letter);
    }
    for (const auto& t : acc) terms.push_back({t.col, t.val * e.val});
  }
  return collect(std::move(terms));
}

Subspace QuadraticQuotient::ideal_component(std::size_t degree) const {
  std::size_t total = 1;
  for (std::size_t i = 0; i < degree; ++i) total *= n_;
  const auto& b = basis_.at(degree);
  std::unordered_map<std::size_t, std::size_t> is_basis;
  for (std::size_t k = 0; k < b.size(); ++k) is_basis.emplace(b[k], k);
  // J_n is spanned by m - NF(m) over all monomials m.
  std::vector<SparseVec> vectors;
  std::vector<std::size_t> w(degree);
  for (std::size_t idx = 0; idx < total; ++idx) {
    if (is_basis.contains(idx)) continue;
    std::size_t rest = idx;
    for (std::size_t k = degree; k-- > 0;) {
      w[k] = rest % n_;
      rest /= n_;
    }
    std::vector<Entry> terms{{idx, Scalar(1)}};
    for (const auto& t : normal_form(w)) terms.push_back({b[t.col], -t.val});
    vectors.push_back(collect(std::move(terms)));
  }
  return Subspace::span(total, std::move(vectors));
}

}  // namespace hecke
