#include "support.hpp"

#include "hecke/error.hpp"
#include "hecke/frt.hpp"

namespace testing {

InputSpec diagonal(const nlohmann::json& qmatrix) { return builtin("diagonal", {{"qmatrix", qmatrix}}); }

std::vector<NamedCase> oracle_suite() {
  using nlohmann::json;
  std::vector<NamedCase> out;
  out.push_back({"trivial1", builtin("trivial1")});
  out.push_back({"QP2(1)", diagonal(json::parse(R"([[1,1],[1,1]])"))});
  out.push_back({"QP2(2)", diagonal(json::parse(R"([[1,"2"],["1/2",1]])"))});
  out.push_back({"QP2(1/3)", diagonal(json::parse(R"([[1,"1/3"],["3",1]])"))});
  out.push_back({"QP3(mixed)", diagonal(json::parse(R"([[1,"2","1/3"],["1/2",1,"3"],["3","1/3",1]])"))});
  out.push_back({"example2", builtin("example2")});
  return out;
}

std::vector<Mat> diagonal_family(std::size_t n) {
  const std::vector<Scalar> values = {Scalar(1), Scalar(2), Scalar(1, 2), Scalar(3), Scalar(1, 3)};
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) slots.emplace_back(i, j);
  std::size_t total = ipow(values.size(), slots.size());
  std::vector<Mat> out;
  for (std::size_t code = 0; code < total; ++code) {
    Mat q = Mat::identity(n);
    std::size_t c = code;
    for (auto [i, j] : slots) {
      q(i, j) = values[c % values.size()];
      q(j, i) = 1 / q(i, j);
      c /= values.size();
    }
    out.push_back(q);
  }
  return out;
}

std::size_t ipow(std::size_t base, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= base;
  return r;
}

std::vector<SparseVec> embed(const SparseVec& v, std::size_t n, std::size_t k, std::size_t a, std::size_t b) {
  const std::size_t left = ipow(n, a), right = ipow(n, b), mid = ipow(n, k);
  std::vector<SparseVec> out;
  for (std::size_t l = 0; l < left; ++l)
    for (std::size_t r = 0; r < right; ++r) {
      SparseVec w;
      for (const auto& e : v) w.push_back({(l * mid + e.col) * right + r, e.val});
      out.push_back(std::move(w));
    }
  return out;
}

Subspace ideal_by_definition(const Subspace& rel, std::size_t n, std::size_t deg) {
  std::vector<SparseVec> gens;
  for (std::size_t a = 0; a + 2 <= deg; ++a)
    for (const auto& v : rel.basis()) {
      auto e = embed(v, n, 2, a, deg - 2 - a);
      gens.insert(gens.end(), e.begin(), e.end());
    }
  return Subspace::span(ipow(n, deg), std::move(gens));
}

Subspace koszul_by_definition(const Subspace& rel, std::size_t n, std::size_t deg) {
  if (deg == 0) return Subspace::whole(1);
  if (deg == 1) return Subspace::whole(n);
  std::vector<Subspace> pieces;
  for (std::size_t a = 0; a + 2 <= deg; ++a) {
    std::vector<SparseVec> gens;
    for (const auto& v : rel.basis()) {
      auto e = embed(v, n, 2, a, deg - 2 - a);
      gens.insert(gens.end(), e.begin(), e.end());
    }
    pieces.push_back(Subspace::span(ipow(n, deg), std::move(gens)));
  }
  return intersect(pieces, ipow(n, deg));
}

Mat nakayama_by_functional(const Subspace& dual_rel, std::size_t n, std::size_t d) {
  const std::size_t top = ipow(n, d);
  const Subspace j = ideal_by_definition(dual_rel, n, d);
  // Functionals vanishing on J_d: kernel of the basis matrix of J_d.
  Subspace lam = d >= 2 ? kernel(j.basis_matrix()) : Subspace::whole(top);
  if (lam.dim() != 1) throw Error("NotFrobeniusShape", "top functional is not unique");
  const std::vector<Scalar> f = to_dense(lam.basis().front(), top);
  const std::size_t rest = ipow(n, d - 1);
  // F(i, t) = lam(v_i t), G(l, t) = lam(t v_l); solve F = E^t G.
  Mat fm(n, rest), gm(n, rest);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t t = 0; t < rest; ++t) {
      fm(i, t) = f[i * rest + t];
      gm(i, t) = f[t * n + i];
    }
  // G has full row rank; pick n independent columns and solve the square system.
  const RrefResult rr = rref(gm);
  std::vector<std::size_t> cols;
  for (std::size_t r = 0; r < rr.rank; ++r)
    for (std::size_t c = 0; c < rest; ++c)
      if (rr.echelon(r, c) != 0) {
        cols.push_back(c);
        break;
      }
  if (cols.size() != n) throw Error("DegenerateForm", "degree-1 block is singular");
  Mat gs(n, n), fs(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      gs(i, k) = gm(i, cols[k]);
      fs(i, k) = fm(i, cols[k]);
    }
  // fs = E^t gs  ->  gs^t E = fs^t
  Mat e = solve(gs.transpose(), fs.transpose());
  if (!(fm == e.transpose() * gm)) throw Error("NotNakayama", "no automorphism satisfies the form identity");
  return e;
}

bool all_checks_pass(std::size_t n, const Mat& table) {
  try {
    const Braiding b(n, table);
    if (!validate_braid_equation(b) || !is_invertible(b) || !rigidity_check(b)) return false;
    const Scalar q = verify_label(b);
    const QuadraticData qd = build_quadratic(b, q);
    const ActionFamily af = action_matrices(b);
    return rtt_check(b, af) && h_linearity_check(b, af) && stability_check(af, qd.relations, 2);
  } catch (const Error&) {
    return false;
  }
}

std::size_t mutation_survivors(const InputSpec& spec) {
  const std::size_t n2 = spec.braiding.rows();
  std::size_t survivors = 0;
  for (std::size_t r = 0; r < n2; ++r)
    for (std::size_t c = 0; c < n2; ++c) {
      Mat t = spec.braiding;
      t(r, c) += 1;
      if (all_checks_pass(spec.dimension, t)) ++survivors;
    }
  return survivors;
}

Subspace example2_relations() {
  auto idx = [](std::size_t a, std::size_t b) { return (a - 1) * 4 + (b - 1); };
  const std::size_t rels[6][4] = {{1, 2, 3, 4}, {1, 3, 2, 4}, {4, 2, 3, 1}, {4, 3, 2, 1}, {1, 4, 4, 1}, {2, 3, 3, 2}};
  std::vector<SparseVec> gens;
  for (const auto& r : rels) {
    std::vector<Scalar> v(16);
    v[idx(r[0], r[1])] += 1;
    v[idx(r[2], r[3])] -= 1;
    gens.push_back(to_sparse(v));
  }
  return Subspace::span(16, std::move(gens));
}

}  // namespace testing
