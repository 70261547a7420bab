#include <doctest.h>

#include <random>

#include "hecke/error.hpp"
#include "hecke/nichols.hpp"
#include "support.hpp"

using namespace hecke;
using namespace testing;

namespace {

QuadraticData quadratic_of(const InputSpec& spec) {
  const Braiding b = to_braiding(spec, Convention::standard);
  return build_quadratic(b, verify_label(b));
}

Mat reversal_matrix(std::size_t n) {
  const auto rev = reversal_permutation(n, 2);
  Mat p(n * n, n * n);
  for (std::size_t i = 0; i < n * n; ++i) p(rev[i], i) = 1;
  return p;
}

}  // namespace

TEST_CASE("default cap") {
  CHECK(default_cap(1) == 12);
  CHECK(default_cap(2) == 14);
  CHECK(default_cap(3) == 9);
  CHECK(default_cap(4) == 7);
  CHECK(default_cap(40) == 4);
}

TEST_CASE("relations of the 4-dimensional example are the printed ones") {
  const QuadraticData qd = quadratic_of(builtin("example2"));
  CHECK(qd.relations == example2_relations());
  CHECK(qd.relations.dim() == 6);
  CHECK(qd.dual_relations.dim() == 10);
}

TEST_CASE("relations and dual relations against independent constructions") {
  for (const auto& c : oracle_suite()) {
    CAPTURE(c.name);
    const Braiding b = to_braiding(c.spec, Convention::standard);
    const QuadraticData qd = quadratic_of(c.spec);
    const std::size_t n = b.dim(), n2 = n * n;
    const Mat cm = operator_on_V2(b);
    CHECK(qd.relations == kernel(cm + Mat::identity(n2)));
    CHECK(qd.relations == column_space(cm - Mat::scalar(n2, qd.q)));
    // F annihilates I under the reversed pairing iff (B P) F = 0 with B the basis rows of I.
    const Mat p = reversal_matrix(n);
    const Subspace direct = qd.relations.is_zero() ? Subspace::whole(n2) : kernel(qd.relations.basis_matrix() * p);
    CHECK(qd.dual_relations == direct);
    // I^perp is the (-1)-eigenspace of the dual braiding -q^{-1} c^t.
    const Mat dual = (Scalar(-1) / qd.q) * (p * cm.transpose() * p);
    CHECK(qd.dual_relations == kernel(dual + Mat::identity(n2)));
  }
}

TEST_CASE("graded pieces against definitions") {
  for (const auto& c : oracle_suite()) {
    CAPTURE(c.name);
    const QuadraticData qd = quadratic_of(c.spec);
    const std::size_t n = qd.n;
    const GradedProfile gp = graded_profile(qd, 5);
    for (std::size_t k = 0; k <= gp.cap; ++k) {
      CAPTURE(k);
      if (ipow(n, k) > 1100) break;
      const Subspace j = ideal_by_definition(qd.relations, n, k);
      CHECK(gp.ideal_component(k) == j);
      CHECK(gp.dims_r[k] == ipow(n, k) - j.dim());
      CHECK(gp.koszul_dual[k] == koszul_by_definition(qd.relations, n, k));
      // dim R^!_k from the dual presentation.
      CHECK(gp.dims_dual[k] == ipow(n, k) - ideal_by_definition(qd.dual_relations, n, k).dim());
    }
  }
}

TEST_CASE("dimension profiles") {
  using nlohmann::json;
  const GradedProfile triv = graded_profile(quadratic_of(builtin("trivial1")), 6);
  CHECK(triv.dims_r == std::vector<std::size_t>(7, 1));
  CHECK(triv.gldim == 1);
  const GradedProfile qp2 = graded_profile(quadratic_of(diagonal(json::parse(R"([[1,"2"],["1/2",1]])"))), 6);
  CHECK(qp2.dims_r == std::vector<std::size_t>{1, 2, 3, 4, 5, 6, 7});
  CHECK(qp2.dims_dual == std::vector<std::size_t>{1, 2, 1, 0, 0, 0, 0});
  CHECK(qp2.gldim == 2);
  const GradedProfile ex2 = graded_profile(quadratic_of(builtin("example2")), 6);
  CHECK(ex2.dims_dual == std::vector<std::size_t>{1, 4, 6, 4, 1, 0, 0});
  CHECK(ex2.dims_r == std::vector<std::size_t>{1, 4, 10, 20, 35, 56, 84});
  CHECK(ex2.gldim == 4);
  CHECK_THROWS_AS(graded_profile(quadratic_of(builtin("trivial1")), 1), Error);
}

TEST_CASE("degenerate relation spaces") {
  QuadraticData free2{2, Scalar(1), Subspace(4), Subspace::whole(4)};
  const GradedProfile f = graded_profile(free2, 5);
  CHECK(f.gldim == 1);
  CHECK(f.dims_r == std::vector<std::size_t>{1, 2, 4, 8, 16, 32});
  CHECK(hilbert_identity(f));
  CHECK_NOTHROW(koszul_check(free2, f));
  // Global dimension 1 but exponential growth: not AS-regular.
  CHECK_THROWS_AS(as_regularity_check(free2, f), Error);

  QuadraticData dual_numbers{1, Scalar(2), Subspace::whole(1), Subspace(1)};
  const GradedProfile dn = graded_profile(dual_numbers, 6);
  CHECK_FALSE(dn.gldim.has_value());
  CHECK(dn.dims_dual == std::vector<std::size_t>(7, 1));
  CHECK(dn.dims_r == std::vector<std::size_t>{1, 1, 0, 0, 0, 0, 0});
  CHECK(hilbert_identity(dn));
}

TEST_CASE("koszul, hilbert and AS checks on the suite") {
  for (const auto& c : oracle_suite()) {
    CAPTURE(c.name);
    const QuadraticData qd = quadratic_of(c.spec);
    const GradedProfile gp = graded_profile(qd, 6);
    REQUIRE(gp.gldim);
    const KoszulReport kr = koszul_check(qd, gp);
    for (const auto& row : kr.table) {
      CAPTURE(row.internal_degree);
      CAPTURE(row.position);
      CHECK(row.homology == (row.internal_degree == 0 && row.position == 0 ? 1u : 0u));
    }
    CHECK(hilbert_identity(gp));
    const AsRegularityReport as = as_regularity_check(qd, gp);
    const long d = static_cast<long>(*gp.gldim);
    CHECK(as.window_hi == d);
    std::size_t total = 0;
    for (const auto& row : as.table) {
      total += row.homology;
      if (row.homology) {
        CHECK(row.position == static_cast<std::size_t>(d));
        CHECK(row.internal_degree == d);
      }
    }
    CHECK(total == 1);
  }
}

TEST_CASE("quotient multiplication is associative") {
  const QuadraticData qd = quadratic_of(builtin("example2"));
  QuadraticQuotient alg(qd.n, qd.relations);
  alg.extend_to(7);
  std::mt19937 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t da = 1 + trial % 2, db = 1 + trial % 3, dc = 1 + trial % 2;
    auto pick = [&](std::size_t deg) {
      std::uniform_int_distribution<std::size_t> u(0, alg.dim(deg) - 1);
      return SparseVec{{u(rng), Scalar(1)}};
    };
    const SparseVec a = pick(da), b = pick(db), c = pick(dc);
    CHECK(alg.multiply(da + db, alg.multiply(da, a, db, b), dc, c) ==
          alg.multiply(da, a, db + dc, alg.multiply(db, b, dc, c)));
  }
  // Normal forms of words agree with stepwise right multiplication.
  const std::vector<std::size_t> w = {3, 1, 2, 0};
  SparseVec acc{{0, Scalar(1)}};
  for (std::size_t k = 0; k < w.size(); ++k) acc = alg.right_multiply(k, acc, w[k]);
  CHECK(acc == alg.normal_form(w));
  CHECK(alg.normal_form(std::vector<std::size_t>{0, 1}) == alg.normal_form(std::vector<std::size_t>{2, 3}));
}
