#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace singvec {

using Rational = mpq_class;

/// Canonical text form: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);

/// Accepts "p", "-p", "p/q" with optional surrounding whitespace.
Rational parse_rational(std::string_view text);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

/// Returns true and stores the value when q is an integer fitting in a long.
bool to_int(const Rational& q, long& out);

using RationalMatrix = std::vector<std::vector<Rational>>;

/// Solves A x = b exactly; A square. Returns false when A is singular.
bool solve_linear(RationalMatrix a, std::vector<Rational> b, std::vector<Rational>& x);

/// Inverse of a square matrix; returns false when singular.
bool invert(const RationalMatrix& a, RationalMatrix& inv);

}  // namespace singvec
