#include "hecke/frobenius.hpp"

#include <string>

#include "hecke/error.hpp"

namespace hecke {

namespace {

SparseVec unit(std::size_t i) { return {{i, Scalar(1)}}; }

SparseVec apply_columns(const Mat& m, const SparseVec& v) {
  std::vector<Entry> terms;
  for (const auto& e : v)
    for (std::size_t r = 0; r < m.rows(); ++r)
      if (sgn(m(r, e.col)) != 0) terms.push_back({r, m(r, e.col) * e.val});
  return collect(std::move(terms));
}

}  // namespace

DualAlgebraTables build_dual_tables(const QuadraticData& qd, const GradedProfile& gp) {
  if (!gp.gldim) throw Error("CapExceeded", "global dimension exceeds cap");
  DualAlgebraTables t;
  t.d = *gp.gldim;
  t.algebra = std::make_shared<QuadraticQuotient>(qd.n, qd.dual_relations);
  t.algebra->extend_to(t.d + 1);
  for (std::size_t k = 0; k <= t.d; ++k) {
    t.dims.push_back(t.algebra->dim(k));
    if (t.dims[k] != gp.dims_dual[k])
      throw Error("DualMismatch", "dim R^!_" + std::to_string(k) + " differs from dim K_" + std::to_string(k));
  }
  if (t.dims[t.d] != 1 || t.algebra->dim(t.d + 1) != 0)
    throw Error("NotFrobeniusShape", "top component of R^! is not one-dimensional");

  t.products.assign(t.d + 1, std::vector<std::vector<SparseVec>>(t.d + 1));
  for (std::size_t a = 0; a <= t.d; ++a)
    for (std::size_t b = 0; a + b <= t.d; ++b) {
      auto& table = t.products[a][b];
      table.resize(t.dims[a] * t.dims[b]);
      for (std::size_t x = 0; x < t.dims[a]; ++x)
        for (std::size_t y = 0; y < t.dims[b]; ++y)
          table[x * t.dims[b] + y] = t.algebra->multiply(a, unit(x), b, unit(y));
    }
  return t;
}

bool tables_associative(const DualAlgebraTables& t) {
  const auto& alg = *t.algebra;
  for (std::size_t a = 0; a <= t.d; ++a)
    for (std::size_t b = 0; a + b <= t.d; ++b)
      for (std::size_t c = 0; a + b + c <= t.d; ++c)
        for (std::size_t x = 0; x < t.dims[a]; ++x)
          for (std::size_t y = 0; y < t.dims[b]; ++y)
            for (std::size_t z = 0; z < t.dims[c]; ++z) {
              SparseVec left = alg.multiply(a + b, t.product(a, x, b, y), c, unit(z));
              SparseVec right = alg.multiply(a, unit(x), b + c, t.product(b, y, c, z));
              if (left != right) return false;
            }
  return true;
}

FrobeniusForm frobenius_form(const DualAlgebraTables& t) {
  FrobeniusForm form;
  for (std::size_t k = 0; k <= t.d; ++k) {
    Mat block(t.dims[k], t.dims[t.d - k]);
    for (std::size_t x = 0; x < block.rows(); ++x)
      for (std::size_t y = 0; y < block.cols(); ++y)
        if (const Scalar* c = find(t.product(k, x, t.d - k, y), 0)) block(x, y) = *c;
    if (!block.is_square() || rref(block).rank != block.rows())
      throw Error("DegenerateForm", "block " + std::to_string(k) + " is singular");
    form.blocks.push_back(std::move(block));
  }
  return form;
}

NakayamaAutomorphism nakayama_bruteforce(const DualAlgebraTables& t, const FrobeniusForm& form) {
  // B(x, y) = B(y, eta x)  <=>  G_k^T = G_{d-k} eta_k
  NakayamaAutomorphism eta;
  for (std::size_t k = 0; k <= t.d; ++k)
    eta.per_degree.push_back(solve(form.blocks[t.d - k], form.blocks[k].transpose()));

  for (std::size_t a = 0; a <= t.d; ++a)
    for (std::size_t b = 0; a + b <= t.d; ++b)
      for (std::size_t x = 0; x < t.dims[a]; ++x)
        for (std::size_t y = 0; y < t.dims[b]; ++y) {
          SparseVec lhs = apply_columns(eta.per_degree[a + b], t.product(a, x, b, y));
          std::vector<Entry> terms;
          for (std::size_t x2 = 0; x2 < t.dims[a]; ++x2) {
            const Scalar& ex = eta.per_degree[a](x2, x);
            if (sgn(ex) == 0) continue;
            for (std::size_t y2 = 0; y2 < t.dims[b]; ++y2) {
              const Scalar& ey = eta.per_degree[b](y2, y);
              if (sgn(ey) == 0) continue;
              for (const auto& p : t.product(a, x2, b, y2)) terms.push_back({p.col, ex * ey * p.val});
            }
          }
          if (lhs != collect(std::move(terms)))
            throw Error("NotMultiplicative", "eta fails on degrees " + std::to_string(a) + "+" + std::to_string(b));
        }
  return eta;
}

Mat nakayama_formula_deg1(const Braiding& b, const HomologicalData& hd) {
  const std::size_t n = b.dim();
  const Scalar factor = -hd.quantum_label / hd.q;
  Mat e(n, n);
  for (std::size_t l = 0; l < n; ++l)
    for (std::size_t i = 0; i < n; ++i) {
      Scalar acc;
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) acc += hd.matrix(i, k) * b.coeff(j, k, j, l);
      e(l, i) = factor * acc;
    }
  return e;
}

ModularFacts modular_facts(const DualAlgebraTables& t) {
  const auto& alg = *t.algebra;
  const SparseVec integral = unit(0);
  ModularFacts facts{true, true};
  for (std::size_t k = 0; k <= t.d; ++k)
    for (std::size_t x = 0; x < t.dims[k]; ++x) {
      // eps(x) is 1 on the unit and 0 in positive degree.
      const SparseVec expected = k == 0 ? integral : SparseVec{};
      if (alg.multiply(k, unit(x), t.d, integral) != expected) facts.left_annihilates = false;
      if (alg.multiply(t.d, integral, k, unit(x)) != expected) facts.right_annihilates = false;
    }
  if (!facts.modular_is_counit()) throw Error("ModularMismatch", "integral of R^! is not two-sided");
  return facts;
}

}  // namespace hecke
