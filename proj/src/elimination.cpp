#include "hecke/elimination.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hecke {

namespace {

constexpr std::size_t kParallelRows = 64;

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

// Rows in echelon form with unit pivots, keyed by pivot column.
class ForwardBasis {
 public:
  void insert(SparseVec v) {
    while (!v.empty()) {
      auto it = pivot_row_.find(v.front().col);
      if (it == pivot_row_.end()) break;
      Scalar factor = -v.front().val;
      axpy(v, factor, rows_[it->second]);
    }
    if (v.empty()) return;
    Scalar inv = 1 / v.front().val;
    scale(v, inv);
    pivot_row_.emplace(v.front().col, rows_.size());
    rows_.push_back(std::move(v));
  }

  std::vector<SparseVec> take() && { return std::move(rows_); }
  std::vector<SparseVec>& rows() { return rows_; }

 private:
  std::vector<SparseVec> rows_;
  std::unordered_map<std::size_t, std::size_t> pivot_row_;
};

}  // namespace

Echelon echelonize(std::vector<SparseVec> rows, std::size_t /*cols*/, bool reduce) {
  const std::size_t chunks =
      rows.size() >= kParallelRows ? static_cast<std::size_t>(std::max(1, max_threads())) : 1;
  std::vector<ForwardBasis> partial(chunks);
  const std::size_t per = (rows.size() + chunks - 1) / std::max<std::size_t>(chunks, 1);

#pragma omp parallel for schedule(static) if (chunks > 1)
  for (std::size_t c = 0; c < chunks; ++c) {
    const std::size_t lo = c * per;
    const std::size_t hi = std::min(rows.size(), lo + per);
    for (std::size_t i = lo; i < hi; ++i) partial[c].insert(std::move(rows[i]));
  }
  for (std::size_t c = 1; c < chunks; ++c)
    for (auto& r : partial[c].rows()) partial[0].insert(std::move(r));

  Echelon out;
  out.rows = chunks == 0 ? std::vector<SparseVec>{} : std::move(partial[0]).take();
  std::sort(out.rows.begin(), out.rows.end(),
            [](const SparseVec& a, const SparseVec& b) { return a.front().col < b.front().col; });
  out.pivots.reserve(out.rows.size());
  for (const auto& r : out.rows) out.pivots.push_back(r.front().col);
  if (!reduce) return out;

  // Back-substitution. Reduced rows only carry non-pivot columns past their
  // pivot, so the set of pivot columns to clear can only shrink.
  std::unordered_map<std::size_t, std::size_t> index_of;
  for (std::size_t k = 0; k < out.pivots.size(); ++k) index_of.emplace(out.pivots[k], k);
  std::vector<char> pending(out.rows.size(), 0);
  for (const auto& r : out.rows)
    for (std::size_t e = 1; e < r.size(); ++e)
      if (auto it = index_of.find(r[e].col); it != index_of.end()) pending[it->second] = 1;

  for (std::size_t k = out.rows.size(); k-- > 0;) {
    if (!pending[k]) continue;
    const std::size_t col = out.pivots[k];
    const SparseVec& pivot_row = out.rows[k];
#pragma omp parallel for schedule(dynamic, 32) if (k > kParallelRows)
    for (std::size_t j = 0; j < k; ++j) {
      const Scalar* v = find(out.rows[j], col);
      if (v == nullptr) continue;
      Scalar factor = -*v;
      axpy(out.rows[j], factor, pivot_row);
    }
  }
  return out;
}

std::size_t rank_of(std::vector<SparseVec> rows, std::size_t cols) {
  return echelonize(std::move(rows), cols, false).rank();
}

std::vector<SparseVec> left_kernel(const std::vector<SparseVec>& rows, std::size_t cols) {
  std::vector<SparseVec> augmented;
  augmented.reserve(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    SparseVec r = rows[i];
    r.push_back({cols + i, Scalar(1)});
    augmented.push_back(std::move(r));
  }
  Echelon e = echelonize(std::move(augmented), cols + rows.size(), true);
  std::vector<SparseVec> out;
  for (auto& r : e.rows) {
    if (r.front().col < cols) continue;
    for (auto& entry : r) entry.col -= cols;
    out.push_back(std::move(r));
  }
  return out;
}

namespace reference {

DenseRref rref(const Mat& m) {
  DenseRref out{m, {}};
  Mat& a = out.echelon;
  std::size_t lead_row = 0;
  for (std::size_t col = 0; col < a.cols() && lead_row < a.rows(); ++col) {
    std::size_t pivot = lead_row;
    while (pivot < a.rows() && sgn(a(pivot, col)) == 0) ++pivot;
    if (pivot == a.rows()) continue;
    if (pivot != lead_row)
      for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(pivot, c), a(lead_row, c));
    Scalar inv = 1 / a(lead_row, col);
    for (std::size_t c = 0; c < a.cols(); ++c) a(lead_row, c) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == lead_row || sgn(a(r, col)) == 0) continue;
      Scalar f = a(r, col);
      for (std::size_t c = 0; c < a.cols(); ++c) a(r, c) -= f * a(lead_row, c);
    }
    out.pivots.push_back(col);
    ++lead_row;
  }
  return out;
}

}  // namespace reference
}  // namespace hecke
