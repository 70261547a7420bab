#include "hecke/nichols.hpp"

#include <algorithm>
#include <exception>
#include <string>

#include "hecke/error.hpp"

namespace hecke {

namespace {

std::size_t ipow(std::size_t base, std::size_t e) {
  std::size_t r = 1;
  while (e-- > 0) r *= base;
  return r;
}

// Composes linear maps given by image rows: returns sum_k v_k * rows[k].
SparseVec apply_rows(const std::vector<SparseVec>& rows, const SparseVec& v) {
  std::vector<Entry> terms;
  for (const auto& e : v)
    for (const auto& t : rows[e.col]) terms.push_back({t.col, t.val * e.val});
  return collect(std::move(terms));
}

bool composes_to_zero(const std::vector<SparseVec>& first, const std::vector<SparseVec>& second) {
  for (const auto& row : first)
    if (!apply_rows(second, row).empty()) return false;
  return true;
}

// Rethrows the first captured exception, in loop order.
void rethrow_first(const std::vector<std::exception_ptr>& errors) {
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace

QuadraticData build_quadratic(const Braiding& b, const Scalar& q) {
  const std::size_t n = b.dim();
  HeckeSplit split = hecke_split(b, q);
  const Mat c = operator_on_V2(b);
  if (column_space(c - Mat::scalar(n * n, q)) != split.ker_plus)
    throw Error("NotHecke", "ker(c + 1) differs from im(c - q)");
  QuadraticData qd;
  qd.n = n;
  qd.q = q;
  qd.relations = std::move(split.ker_plus);
  auto reversal = reversal_permutation(n, 2);
  qd.dual_relations = annihilator(qd.relations, reversal);
  return qd;
}

std::size_t default_cap(std::size_t n) {
  if (n <= 1) return 12;
  std::size_t cap = 0;
  std::size_t power = 1;
  while (power * n <= 30000) {
    power *= n;
    ++cap;
  }
  return std::max<std::size_t>(cap, 4);
}

GradedProfile graded_profile(const QuadraticData& qd, std::size_t cap) {
  if (cap < 2) throw Error("BadCap", "cap must be at least 2");
  const std::size_t n = qd.n;
  GradedProfile gp;
  gp.cap = cap;
  gp.algebra = std::make_shared<QuadraticQuotient>(n, qd.relations);
  gp.algebra->extend_to(cap);
  for (std::size_t k = 0; k <= cap; ++k) gp.dims_r.push_back(gp.algebra->dim(k));

  gp.koszul_dual.push_back(Subspace::whole(1));
  gp.koszul_dual.push_back(Subspace::whole(n));
  gp.koszul_dual.push_back(qd.relations);
  for (std::size_t k = 2; k < cap; ++k) {
    const Subspace& prev = gp.koszul_dual[k];
    const std::size_t amb = ipow(n, k);
    if (prev.is_zero()) {
      gp.koszul_dual.emplace_back(amb * n);
      continue;
    }
    // K_{k+1} = (V (x) K_k) cap (K_k (x) V)
    std::vector<SparseVec> left, right;
    for (std::size_t a = 0; a < n; ++a)
      for (const auto& w : prev.basis()) {
        SparseVec l, r;
        for (const auto& e : w) l.push_back({a * amb + e.col, e.val});
        left.push_back(std::move(l));
      }
    for (const auto& w : prev.basis())
      for (std::size_t a = 0; a < n; ++a) {
        SparseVec r;
        for (const auto& e : w) r.push_back({e.col * n + a, e.val});
        right.push_back(std::move(r));
      }
    gp.koszul_dual.push_back(intersect(Subspace::span(amb * n, std::move(left)),
                                       Subspace::span(amb * n, std::move(right))));
  }
  for (const auto& k : gp.koszul_dual) gp.dims_dual.push_back(k.dim());

  std::size_t top = 0;
  for (std::size_t k = 0; k <= cap; ++k)
    if (gp.dims_dual[k] != 0) top = k;
  if (top < cap) gp.gldim = top;
  return gp;
}

std::vector<std::vector<SparseVec>> left_split(const GradedProfile& gp, std::size_t m) {
  const std::size_t n = gp.koszul_dual[1].ambient_dim();
  const Subspace& km = gp.koszul_dual.at(m);
  const Subspace& lower = gp.koszul_dual.at(m - 1);
  const std::size_t slice = lower.ambient_dim();
  std::vector<std::vector<SparseVec>> split(km.dim(), std::vector<SparseVec>(n));
  for (std::size_t r = 0; r < km.dim(); ++r) {
    std::vector<SparseVec> slices(n);
    for (const auto& e : km.basis()[r]) slices[e.col / slice].push_back({e.col % slice, e.val});
    for (std::size_t x = 0; x < n; ++x) {
      auto coords = lower.coordinates(slices[x]);
      if (!coords)
        throw Error("NotSplit", "K_" + std::to_string(m) + " is not inside V (x) K_" + std::to_string(m - 1));
      split[r][x] = to_sparse(*coords);
    }
  }
  return split;
}

KoszulReport koszul_check(const QuadraticData& qd, const GradedProfile& gp) {
  if (!gp.gldim) throw Error("CapExceeded", "global dimension exceeds cap");
  const std::size_t d = *gp.gldim;
  const std::size_t n = qd.n;
  std::vector<std::vector<std::vector<SparseVec>>> split(d + 1);
  for (std::size_t m = 1; m <= d; ++m) split[m] = left_split(gp, m);

  const std::size_t cap = gp.cap;
  std::vector<std::vector<ChainCheck>> rows_per_t(cap + 1);
  std::vector<std::exception_ptr> errors(cap + 1);

#pragma omp parallel for schedule(dynamic, 1)
  for (std::size_t t = 0; t <= cap; ++t) {
    try {
      const std::size_t top = std::min(t, d);
      // diff[m]: images of the basis of C_m = R_{t-m} (x) K_m in C_{m-1}.
      std::vector<std::vector<SparseVec>> diff(top + 1);
      std::vector<std::size_t> rank(top + 2, 0);
      for (std::size_t m = 1; m <= top; ++m) {
        const std::size_t dr = gp.dims_r[t - m];
        const std::size_t dk = gp.dims_dual[m];
        const std::size_t dk_low = gp.dims_dual[m - 1];
        auto& rows = diff[m];
        rows.resize(dr * dk);
        for (std::size_t b = 0; b < dr; ++b)
          for (std::size_t r = 0; r < dk; ++r) {
            std::vector<Entry> terms;
            for (std::size_t x = 0; x < n; ++x)
              for (const auto& c : split[m][r][x])
                for (const auto& p : gp.algebra->times_generator(t - m, b, x))
                  terms.push_back({p.col * dk_low + c.col, c.val * p.val});
            rows[b * dk + r] = collect(std::move(terms));
          }
        rank[m] = rank_of(rows, gp.dims_r[t - m + 1] * dk_low);
        if (m >= 2 && !composes_to_zero(diff[m], diff[m - 1]))
          throw Error("NotComplex", "d o d != 0 at t=" + std::to_string(t) + ", m=" + std::to_string(m));
      }
      for (std::size_t m = 0; m <= top; ++m) {
        ChainCheck row;
        row.internal_degree = static_cast<long>(t);
        row.position = m;
        row.chain_dim = gp.dims_r[t - m] * gp.dims_dual[m];
        row.homology = row.chain_dim - rank[m] - rank[m + 1];
        rows_per_t[t].push_back(row);
      }
    } catch (...) {
      errors[t] = std::current_exception();
    }
  }
  rethrow_first(errors);

  KoszulReport report;
  report.max_degree = cap;
  for (auto& rows : rows_per_t)
    for (auto& row : rows) {
      const std::size_t expected = (row.internal_degree == 0 && row.position == 0) ? 1 : 0;
      if (row.homology != expected)
        throw Error("NotExact", "(" + std::to_string(row.internal_degree) + ", " + std::to_string(row.position) +
                                    "): homology of dimension " + std::to_string(row.homology));
      report.table.push_back(row);
    }
  return report;
}

bool hilbert_identity(const GradedProfile& gp) {
  const std::size_t cap = gp.cap;
  for (std::size_t k = 0; k <= cap; ++k) {
    // coefficient of t^k in the product
    long long acc = 0;
    for (std::size_t i = 0; i <= k; ++i) {
      long long term = static_cast<long long>(gp.dims_dual[i]) * static_cast<long long>(gp.dims_r[k - i]);
      acc += (i % 2 == 0) ? term : -term;
    }
    if (acc != (k == 0 ? 1 : 0)) return false;
  }
  return true;
}

AsRegularityReport as_regularity_check(const QuadraticData& qd, const GradedProfile& gp) {
  if (!gp.gldim) throw Error("CapExceeded", "global dimension exceeds cap");
  const long d = static_cast<long>(*gp.gldim);
  const long cap = static_cast<long>(gp.cap);
  const std::size_t n = qd.n;
  const QuadraticQuotient& alg = *gp.algebra;

  std::vector<std::vector<std::vector<SparseVec>>> split(d + 1);
  for (long m = 1; m <= d; ++m) split[m] = left_split(gp, static_cast<std::size_t>(m));

  // Left multiplication tables v_x * e_b : R_j -> R_{j+1}, j < cap.
  std::vector<std::vector<SparseVec>> left(static_cast<std::size_t>(cap));
#pragma omp parallel for schedule(dynamic, 1)
  for (long j = 0; j < cap; ++j) {
    auto& table = left[j];
    table.resize(gp.dims_r[j] * n);
    for (std::size_t b = 0; b < gp.dims_r[j]; ++b)
      for (std::size_t x = 0; x < n; ++x)
        table[b * n + x] = alg.left_multiply(x, static_cast<std::size_t>(j), SparseVec{{b, Scalar(1)}});
  }

  AsRegularityReport report;
  report.window_lo = d - cap;
  report.window_hi = d;
  const std::size_t count = static_cast<std::size_t>(report.window_hi - report.window_lo + 1);
  std::vector<std::vector<ChainCheck>> rows_per_tau(count);
  std::vector<std::exception_ptr> errors(count);

#pragma omp parallel for schedule(dynamic, 1)
  for (std::size_t slot = 0; slot < count; ++slot) {
    try {
      const long tau = report.window_lo + static_cast<long>(slot);
      const long lowest = std::max(0L, tau);
      auto dim_at = [&](long m) -> std::size_t {
        const long j = m - tau;
        if (m < lowest || m > d || j < 0 || j > cap) return 0;
        return gp.dims_dual[m] * gp.dims_r[j];
      };
      // delta[m]: images of the basis of K_m^* (x) R_{m - tau} in position m + 1.
      std::vector<std::vector<SparseVec>> delta(d + 1);
      std::vector<std::size_t> rank(d + 2, 0);
      for (long m = lowest; m < d; ++m) {
        const std::size_t j = static_cast<std::size_t>(m - tau);
        const std::size_t dk = gp.dims_dual[m];
        const std::size_t dk_up = gp.dims_dual[m + 1];
        std::vector<std::vector<Entry>> terms(gp.dims_r[j] * dk);
        for (std::size_t up = 0; up < dk_up; ++up)
          for (std::size_t x = 0; x < n; ++x)
            for (const auto& c : split[m + 1][up][x])
              for (std::size_t b = 0; b < gp.dims_r[j]; ++b)
                for (const auto& p : left[j][b * n + x])
                  terms[b * dk + c.col].push_back({p.col * dk_up + up, c.val * p.val});
        auto& rows = delta[m];
        rows.reserve(terms.size());
        for (auto& t : terms) rows.push_back(collect(std::move(t)));
        rank[m + 1] = rank_of(rows, dim_at(m + 1));
        if (m > lowest && !composes_to_zero(delta[m - 1], delta[m]))
          throw Error("NotComplex", "dual differential does not square to zero");
      }
      for (long m = lowest; m <= d; ++m) {
        ChainCheck row;
        row.internal_degree = tau;
        row.position = static_cast<std::size_t>(m);
        row.chain_dim = dim_at(m);
        // rank[m] is the rank of the map into position m, rank[m + 1] out of it.
        row.homology = row.chain_dim - rank[m] - rank[m + 1];
        rows_per_tau[slot].push_back(row);
      }
    } catch (...) {
      errors[slot] = std::current_exception();
    }
  }
  rethrow_first(errors);

  for (auto& rows : rows_per_tau)
    for (auto& row : rows) {
      const bool top = static_cast<long>(row.position) == d && row.internal_degree == d;
      if (row.homology != (top ? 1u : 0u))
        throw Error("NotASRegular", "(" + std::to_string(row.position) + ", " + std::to_string(row.internal_degree) +
                                        "): cohomology of dimension " + std::to_string(row.homology));
      report.table.push_back(row);
    }
  return report;
}

}  // namespace hecke
