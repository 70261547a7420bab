#include "hecke/braiding.hpp"

#include <stdexcept>

#include "hecke/error.hpp"

namespace hecke {

Braiding::Braiding(std::size_t n, Mat table) : n_(n), table_(std::move(table)) {
  if (table_.rows() != n * n || table_.cols() != n * n)
    throw Error("DimensionMismatch", "braiding table must be N^2 x N^2");
  images_.reserve(n * n);
  for (std::size_t r = 0; r < n * n; ++r) images_.push_back(to_sparse(table_.row(r)));
}

Braiding diagonal_braiding(const Mat& qmatrix) {
  const std::size_t n = qmatrix.rows();
  Mat t(n * n, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t(i * n + j, j * n + i) = qmatrix(i, j);
  return Braiding(n, std::move(t));
}

Mat operator_on_V2(const Braiding& b) { return b.table().transpose(); }

SparseVec apply_on_legs(const Braiding& b, const SparseVec& x, std::size_t leg, std::size_t legs) {
  const std::size_t n = b.dim();
  std::size_t inner = 1;  // legs strictly right of the pair
  for (std::size_t i = leg + 2; i < legs; ++i) inner *= n;
  const std::size_t block = inner * n * n;
  std::vector<Entry> terms;
  for (const auto& e : x) {
    const std::size_t outer = e.col / block;
    const std::size_t pair = (e.col / inner) % (n * n);
    const std::size_t tail = e.col % inner;
    for (const auto& out : b.image(pair / n, pair % n))
      terms.push_back({(outer * n * n + out.col) * inner + tail, out.val * e.val});
  }
  return collect(std::move(terms));
}

bool validate_braid_equation(const Braiding& b) {
  const std::size_t n = b.dim();
  const std::size_t total = n * n * n;
  for (std::size_t idx = 0; idx < total; ++idx) {
    SparseVec lhs{{idx, Scalar(1)}};
    SparseVec rhs = lhs;
    lhs = apply_on_legs(b, apply_on_legs(b, apply_on_legs(b, lhs, 0, 3), 1, 3), 0, 3);
    rhs = apply_on_legs(b, apply_on_legs(b, apply_on_legs(b, rhs, 1, 3), 0, 3), 1, 3);
    if (lhs != rhs) return false;
  }
  return true;
}

bool is_invertible(const Braiding& b) { return rref(b.table()).rank == b.dim() * b.dim(); }

namespace {

bool hecke_identity_holds(const Mat& c, const Mat& c2, const Scalar& q) {
  // c^2 - (q - 1) c - q = 0
  Mat lhs = c2 - (q - 1) * c;
  lhs -= Mat::scalar(c.rows(), q);
  return lhs.is_zero();
}

void check_admissible(const Scalar& q) {
  if (sgn(q) == 0) throw Error("BadLabel", "label q = 0");
  if (q == -1) throw Error("BadLabel", "label q = -1 is a root of unity");
}

}  // namespace

Scalar verify_label(const Braiding& b, const std::optional<Scalar>& q_hint) {
  const Mat c = operator_on_V2(b);
  const Mat c2 = c * c;
  if (q_hint) {
    if (!hecke_identity_holds(c, c2, *q_hint))
      throw Error("NotHecke", "(c - q)(c + 1) != 0 for q = " + to_string(*q_hint));
    check_admissible(*q_hint);
    return *q_hint;
  }
  // c^2 + c = q (c + 1), read off entrywise where c + 1 is nonzero.
  const std::size_t dim = c.rows();
  std::optional<Scalar> q;
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t col = 0; col < dim; ++col) {
      Scalar shifted = c(r, col) + (r == col ? 1 : 0);
      if (sgn(shifted) == 0) continue;
      Scalar candidate = (c2(r, col) + c(r, col)) / shifted;
      if (q && *q != candidate) throw Error("NotHecke", "entrywise label candidates disagree");
      q = candidate;
    }
  if (!q) throw Error("LabelAmbiguous", "c = -id satisfies (c - q)(c + 1) = 0 for every q");
  if (!hecke_identity_holds(c, c2, *q)) throw Error("NotHecke", "(c - q)(c + 1) != 0");
  check_admissible(*q);
  return *q;
}

HeckeSplit hecke_split(const Braiding& b, const Scalar& q) {
  const Mat c = operator_on_V2(b);
  const std::size_t dim = c.rows();
  HeckeSplit s{kernel(c + Mat::identity(dim)), kernel(c - Mat::scalar(dim, q))};
  if (s.ker_plus.dim() + s.ker_q.dim() != dim || !intersect(s.ker_plus, s.ker_q).is_zero())
    throw Error("NotHecke", "eigenspaces of c are not complementary");
  return s;
}

Mat rigidity_matrix(const Braiding& b) {
  const std::size_t n = b.dim();
  Mat m(n * n, n * n);
  for (std::size_t nn = 0; nn < n; ++nn)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(nn * n + k, i * n + j) = b.coeff(i, nn, j, k);
  return m;
}

Mat rigidity_matrix_by_composition(const Braiding& b) {
  const std::size_t n = b.dim();
  const Mat id = Mat::identity(n);
  // db : k -> V (x) V*, 1 |-> sum_a v_a (x) v_a^*
  Mat db(n * n, 1);
  for (std::size_t a = 0; a < n; ++a) db(a * n + a, 0) = 1;
  // ev : V* (x) V -> k
  Mat ev(1, n * n);
  for (std::size_t a = 0; a < n; ++a) ev(0, a * n + a) = 1;
  const Mat step1 = kron(Mat::identity(n * n), db);                 // V*V -> V*VVV*
  const Mat step2 = kron(kron(id, operator_on_V2(b)), id);          // V*VVV* -> V*VVV*
  const Mat step3 = kron(ev, Mat::identity(n * n));                 // V*VVV* -> VV*
  return step3 * step2 * step1;
}

bool rigidity_check(const Braiding& b) {
  const std::size_t n = b.dim();
  return rref(rigidity_matrix(b)).rank == n * n;
}

}  // namespace hecke
