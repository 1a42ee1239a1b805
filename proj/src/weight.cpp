#include "singvec/weight.hpp"

#include "singvec/error.hpp"

namespace singvec {

bool Weight::is_zero() const {
  for (const auto& c : coords_)
    if (c != 0) return false;
  return true;
}

Weight& Weight::operator+=(const Weight& other) {
  if (other.size() != size()) throw Error(ErrorKind::InvalidParams, "weight dimension mismatch");
  for (std::size_t i = 0; i < size(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

Weight& Weight::operator-=(const Weight& other) {
  if (other.size() != size()) throw Error(ErrorKind::InvalidParams, "weight dimension mismatch");
  for (std::size_t i = 0; i < size(); ++i) coords_[i] -= other.coords_[i];
  return *this;
}

Weight& Weight::operator*=(const Rational& s) {
  for (auto& c : coords_) c *= s;
  return *this;
}

std::string serialize(const Weight& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ',';
    out += to_string(w[i]);
  }
  return out;
}

Weight parse_weight(std::string_view text, std::size_t expected_dim) {
  std::vector<Rational> coords;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto comma = text.find(',', start);
    auto piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    coords.push_back(parse_rational(piece));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (expected_dim != 0 && coords.size() != expected_dim)
    throw Error(ErrorKind::Parse, "expected " + std::to_string(expected_dim) + " coordinates, got " +
                                      std::to_string(coords.size()));
  return Weight(std::move(coords));
}

}  // namespace singvec
