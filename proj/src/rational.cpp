#include "singvec/rational.hpp"

#include <climits>
#include <utility>

#include "singvec/error.hpp"

namespace singvec {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidParams: return "InvalidParams";
    case ErrorKind::IsotropicCoroot: return "IsotropicCoroot";
    case ErrorKind::ClosureFailure: return "ClosureFailure";
    case ErrorKind::NotDivisible: return "NotDivisible";
    case ErrorKind::WrongOrder: return "WrongOrder";
    case ErrorKind::Inhomogeneous: return "Inhomogeneous";
    case ErrorKind::ParityViolation: return "ParityViolation";
    case ErrorKind::Parse: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

std::string to_string(const Rational& q) { return q.get_str(); }

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

bool valid_integer(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto s = trim(text);
  auto slash = s.find('/');
  auto num = s.substr(0, slash);
  auto den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
  if (!num.empty() && num.front() == '+') num.remove_prefix(1);
  if (!valid_integer(num) || !valid_integer(den) || den.front() == '-' || den.front() == '+')
    throw Error(ErrorKind::Parse, "not a rational: '" + std::string(text) + "'");
  mpz_class d{std::string(den)};
  if (d == 0) throw Error(ErrorKind::Parse, "zero denominator: '" + std::string(text) + "'");
  Rational q{mpz_class{std::string(num)}, d};
  q.canonicalize();
  return q;
}

bool to_int(const Rational& q, long& out) {
  if (!is_integer(q) || !q.get_num().fits_slong_p()) return false;
  out = q.get_num().get_si();
  return true;
}

bool solve_linear(RationalMatrix a, std::vector<Rational> b, std::vector<Rational>& x) {
  const std::size_t n = a.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) return false;
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rational f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  x.assign(n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return true;
}

bool invert(const RationalMatrix& a, RationalMatrix& inv) {
  const std::size_t n = a.size();
  inv.assign(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<Rational> e(n, Rational(0)), x;
    e[c] = 1;
    if (!solve_linear(a, e, x)) return false;
    for (std::size_t r = 0; r < n; ++r) inv[r][c] = x[r];
  }
  return true;
}

}  // namespace singvec
