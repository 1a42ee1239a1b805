#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "singvec/rational.hpp"

namespace singvec {

/// A vector of h* written in the case's (delta, epsilon) coordinate basis.
class Weight {
 public:
  Weight() = default;
  explicit Weight(std::size_t dim) : coords_(dim, Rational(0)) {}
  explicit Weight(std::vector<Rational> coords) : coords_(std::move(coords)) {}

  std::size_t size() const noexcept { return coords_.size(); }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  Rational& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<Rational>& coords() const noexcept { return coords_; }

  bool is_zero() const;

  Weight& operator+=(const Weight& other);
  Weight& operator-=(const Weight& other);
  Weight& operator*=(const Rational& s);

  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(const Rational& s, Weight a) { return a *= s; }
  friend Weight operator-(Weight a) { return a *= Rational(-1); }

  friend bool operator==(const Weight& a, const Weight& b) { return a.coords_ == b.coords_; }
  friend bool operator!=(const Weight& a, const Weight& b) { return !(a == b); }
  /// Lexicographic on coordinates; used for ordered containers only.
  friend bool operator<(const Weight& a, const Weight& b) { return a.coords_ < b.coords_; }

 private:
  std::vector<Rational> coords_;
};

/// "p/q" entries joined by commas, in basis order.
std::string serialize(const Weight& w);

/// Inverse of serialize(); throws Error(Parse) on malformed text or when the
/// entry count differs from expected_dim (pass 0 to accept any length).
Weight parse_weight(std::string_view text, std::size_t expected_dim = 0);

}  // namespace singvec
