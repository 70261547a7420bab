#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "hecke/braiding.hpp"
#include "hecke/error.hpp"
#include "support.hpp"

using namespace hecke;
using testing::oracle_suite;

namespace {

Braiding relabel(const Braiding& b, const std::vector<std::size_t>& sigma) {
  const std::size_t n = b.dim();
  Mat t(n * n, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t m = 0; m < n; ++m)
        for (std::size_t k = 0; k < n; ++k)
          t(sigma[i] * n + sigma[j], sigma[m] * n + sigma[k]) = b.table()(i * n + j, m * n + k);
  return Braiding(n, t);
}

std::string kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return "none";
}

}  // namespace

TEST_CASE("table layout") {
  Braiding b = diagonal_braiding(Mat{{1, 2}, {Scalar(1, 2), 1}});
  // c(v_0 (x) v_1) = 2 v_1 (x) v_0
  CHECK(b.coeff(1, 0, 0, 1) == 2);
  CHECK(b.coeff(0, 1, 1, 0) == Scalar(1, 2));
  CHECK(operator_on_V2(b) == b.table().transpose());
  CHECK(b.image(0, 1) == SparseVec{{2, Scalar(2)}});
  CHECK_THROWS_AS(Braiding(2, Mat(3, 3)), Error);
}

TEST_CASE("suite braidings satisfy the braid equation, are rigid and Hecke") {
  for (const auto& c : oracle_suite()) {
    CAPTURE(c.name);
    const Braiding b = to_braiding(c.spec, Convention::standard);
    CHECK(validate_braid_equation(b));
    CHECK(is_invertible(b));
    CHECK(rigidity_check(b));
    CHECK(rigidity_matrix(b) == rigidity_matrix_by_composition(b));
    const Scalar q = verify_label(b);
    CHECK(q == 1);
    const HeckeSplit s = hecke_split(b, q);
    CHECK(s.ker_plus.dim() + s.ker_q.dim() == b.dim() * b.dim());
    CHECK(intersect(s.ker_plus, s.ker_q).is_zero());
  }
}

TEST_CASE("braid equation is invariant under relabeling the basis") {
  const Braiding b = to_braiding(builtin("example2"), Convention::standard);
  std::vector<std::size_t> sigma(4);
  std::iota(sigma.begin(), sigma.end(), 0);
  int checked = 0;
  do {
    const Braiding r = relabel(b, sigma);
    CHECK(validate_braid_equation(r));
    CHECK(rigidity_check(r));
    CHECK(verify_label(r) == 1);
    ++checked;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  CHECK(checked == 24);
}

TEST_CASE("labels") {
  CHECK(verify_label(Braiding(1, Mat{{3}})) == 3);
  CHECK(verify_label(Braiding(1, Mat{{Scalar(-1, 2)}})) == Scalar(-1, 2));
  CHECK(kind_of([] { verify_label(Braiding(1, Mat{{-1}})); }) == "LabelAmbiguous");
  CHECK(verify_label(Braiding(1, Mat{{-1}}), Scalar(2)) == 2);
  CHECK(kind_of([] { verify_label(Braiding(1, Mat{{-1}}), Scalar(0)); }) == "BadLabel");
  CHECK(kind_of([] { verify_label(Braiding(1, Mat{{-1}}), Scalar(-1)); }) == "BadLabel");
  const Braiding qp = diagonal_braiding(Mat{{1, 2}, {Scalar(1, 2), 1}});
  CHECK(kind_of([&] { verify_label(qp, Scalar(2)); }) == "NotHecke");
}

TEST_CASE("three eigenvalues are not Hecke") {
  // c(v_i (x) v_j) = q_ij v_j (x) v_i with q_00 = 2: eigenvalues 2, 1, -1.
  const Braiding b = diagonal_braiding(Mat{{2, 1}, {1, 1}});
  CHECK(validate_braid_equation(b));
  CHECK(kind_of([&] { verify_label(b); }) == "NotHecke");
}

TEST_CASE("rigidity") {
  // c = id on V (x) V with N = 2 is a symmetric Hecke braiding but c^b has rank 1.
  const Braiding id2(2, Mat::identity(4));
  CHECK(validate_braid_equation(id2));
  CHECK(is_invertible(id2));
  CHECK_FALSE(rigidity_check(id2));
  CHECK(rigidity_matrix(id2) == rigidity_matrix_by_composition(id2));
  const Braiding zero(1, Mat{{0}});
  CHECK_FALSE(is_invertible(zero));
  CHECK_FALSE(rigidity_check(zero));
}

TEST_CASE("a broken coefficient breaks the braid equation") {
  Mat t = builtin("example2").braiding;
  t(1, 11) = 0;
  t(1, 4) = 1;
  CHECK_FALSE(validate_braid_equation(Braiding(4, t)));
}
