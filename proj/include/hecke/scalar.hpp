#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hecke {

// Exact rational. mpq_class keeps values canonical (lowest terms, positive
// denominator) after every arithmetic operation.
using Scalar = mpq_class;

// Parses "p", "-p", "+p", "p/q" with q > 0. Input need not be in lowest
// terms. Throws Error("BadScalar") on anything else.
Scalar parse_scalar(std::string_view token);

// Canonical string form: "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Scalar& s);

inline bool is_zero(const Scalar& s) { return sgn(s) == 0; }

// s^e for integer e (negative e requires s != 0).
Scalar power(const Scalar& s, long e);

}  // namespace hecke
