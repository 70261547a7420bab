#include "hecke/sparse.hpp"

#include <algorithm>

namespace hecke {

SparseVec to_sparse(std::span<const Scalar> dense) {
  SparseVec v;
  for (std::size_t i = 0; i < dense.size(); ++i)
    if (sgn(dense[i]) != 0) v.push_back({i, dense[i]});
  return v;
}

std::vector<Scalar> to_dense(const SparseVec& v, std::size_t dim) {
  std::vector<Scalar> out(dim);
  for (const auto& e : v) out[e.col] = e.val;
  return out;
}

const Scalar* find(const SparseVec& v, std::size_t col) {
  auto it = std::lower_bound(v.begin(), v.end(), col,
                             [](const Entry& e, std::size_t c) { return e.col < c; });
  if (it == v.end() || it->col != col) return nullptr;
  return &it->val;
}

void axpy(SparseVec& dst, const Scalar& a, const SparseVec& src) {
  if (sgn(a) == 0 || src.empty()) return;
  SparseVec out;
  out.reserve(dst.size() + src.size());
  auto i = dst.begin();
  auto j = src.begin();
  Scalar tmp;
  while (i != dst.end() || j != src.end()) {
    if (j == src.end() || (i != dst.end() && i->col < j->col)) {
      out.push_back(std::move(*i++));
    } else if (i == dst.end() || j->col < i->col) {
      out.push_back({j->col, a * j->val});
      ++j;
    } else {
      tmp = a * j->val;
      tmp += i->val;
      if (sgn(tmp) != 0) out.push_back({i->col, tmp});
      ++i;
      ++j;
    }
  }
  dst = std::move(out);
}

void scale(SparseVec& v, const Scalar& a) {
  if (sgn(a) == 0) {
    v.clear();
    return;
  }
  for (auto& e : v) e.val *= a;
}

SparseVec collect(std::vector<Entry> terms) {
  std::sort(terms.begin(), terms.end(), [](const Entry& x, const Entry& y) { return x.col < y.col; });
  SparseVec out;
  for (auto& t : terms) {
    if (!out.empty() && out.back().col == t.col) {
      out.back().val += t.val;
    } else {
      if (!out.empty() && sgn(out.back().val) == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && sgn(out.back().val) == 0) out.pop_back();
  return out;
}

}  // namespace hecke
