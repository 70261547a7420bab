#include "hecke/scalar.hpp"

#include <cctype>

#include "hecke/error.hpp"

namespace hecke {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s)
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  return true;
}

}  // namespace

Scalar parse_scalar(std::string_view token) {
  std::string_view body = token;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) throw Error("BadScalar", std::string(token));

  Scalar s;
  s.get_num().set_str(std::string(num), 10);
  s.get_den().set_str(std::string(den), 10);
  if (sgn(s.get_den()) == 0) throw Error("BadScalar", std::string(token));
  s.canonicalize();
  if (negative) s = -s;
  return s;
}

std::string to_string(const Scalar& s) {
  if (s.get_den() == 1) return s.get_num().get_str();
  return s.get_str();
}

Scalar power(const Scalar& s, long e) {
  Scalar base = s;
  if (e < 0) {
    base = 1 / s;
    e = -e;
  }
  Scalar out = 1;
  while (e > 0) {
    if (e & 1) out *= base;
    base *= base;
    e >>= 1;
  }
  return out;
}

}  // namespace hecke
