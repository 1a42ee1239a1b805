#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "singvec/superalgebra.hpp"

namespace singvec {

/// Total order on the basis of g: negative root vectors, then the Cartan
/// basis, then positive root vectors. Inside the negative block the default
/// is (height, root index) with an optional generator forced to the end.
class PBWOrder {
 public:
  /// Default order; `rightmost` (a negative basis id) is moved to the end of
  /// the negative block when given.
  static PBWOrder standard(const BracketTable& table, std::optional<int> rightmost = std::nullopt);
  /// Negative block laid out as: every negative id missing from `sequence`
  /// (in default order), then `sequence` itself.
  static PBWOrder with_negative_sequence(const BracketTable& table, const std::vector<int>& sequence);

  std::size_t size() const noexcept { return basis_at_.size(); }
  int num_negative() const noexcept { return num_negative_; }
  int position(int basis_id) const { return position_.at(static_cast<std::size_t>(basis_id)); }
  int basis_at(int pos) const { return basis_at_.at(static_cast<std::size_t>(pos)); }
  bool is_negative_position(int pos) const noexcept { return pos < num_negative_; }
  /// Basis id occupying the last slot of the negative block.
  int rightmost_negative() const { return basis_at(num_negative_ - 1); }
  const std::vector<int>& sequence() const noexcept { return basis_at_; }

  friend bool operator==(const PBWOrder& a, const PBWOrder& b) { return a.basis_at_ == b.basis_at_; }

 private:
  static PBWOrder from_negatives(const BracketTable& table, std::vector<int> negatives);

  std::vector<int> basis_at_;
  std::vector<int> position_;
  int num_negative_ = 0;
};

/// A normal PBW monomial: nondecreasing list of order positions, each odd
/// generator at most once. Exponents are run lengths.
using Monomial = std::vector<std::uint16_t>;

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

/// Finite combination of normal monomials with nonzero rational coefficients.
class UEAElement {
 public:
  using Map = std::unordered_map<Monomial, Rational, MonomialHash>;

  UEAElement() = default;
  static UEAElement scalar(const Rational& c);

  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  const Map& terms() const noexcept { return terms_; }
  /// Coefficient of m (zero when absent).
  Rational coeff(const Monomial& m) const;
  /// Terms sorted by monomial (lexicographic on positions).
  std::vector<std::pair<Monomial, Rational>> sorted_terms() const;

  void add(const Monomial& m, const Rational& c);
  void add(const UEAElement& x, const Rational& c = 1);
  UEAElement& operator*=(const Rational& c);

  friend UEAElement operator+(UEAElement a, const UEAElement& b) {
    a.add(b);
    return a;
  }
  friend UEAElement operator-(UEAElement a, const UEAElement& b) {
    a.add(b, -1);
    return a;
  }
  friend UEAElement operator*(const Rational& c, UEAElement a) { return a *= c; }
  friend bool operator==(const UEAElement& a, const UEAElement& b) { return a.terms_ == b.terms_; }

 private:
  Map terms_;
};

/// Normal-form arithmetic in U(g) against one fixed PBWOrder. Products of
/// a generator with a normal monomial are memoized, so an instance is not
/// safe for concurrent use; give each thread its own.
class PBWAlgebra {
 public:
  PBWAlgebra(std::shared_ptr<const BracketTable> table, PBWOrder order);

  const BracketTable& table() const noexcept { return *table_; }
  const std::shared_ptr<const BracketTable>& table_ptr() const noexcept { return table_; }
  const PBWOrder& order() const noexcept { return order_; }

  UEAElement one() const { return UEAElement::scalar(1); }
  UEAElement generator(int basis_id) const;
  UEAElement from_vector(const GVector& x) const;
  /// Normal form of the word x_1 x_2 ... x_k of basis ids.
  UEAElement word(const std::vector<int>& basis_ids);
  UEAElement power(int basis_id, int k);

  UEAElement multiply(const UEAElement& a, const UEAElement& b);
  /// Normal form of generator * b.
  UEAElement left_multiply(int basis_id, const UEAElement& b);
  /// Adds coeff * (generator at `pos`) * m into out.
  void lmul_into(int pos, const Monomial& m, const Rational& coeff, UEAElement& out);

  /// theta with theta * g^p = x, where g is the rightmost negative generator.
  /// Throws WrongOrder if g is not rightmost (or x leaves U(n^-)),
  /// NotDivisible if some monomial of x has fewer than p trailing g's.
  UEAElement right_divide(const UEAElement& x, int g, int p) const;

  /// Re-expresses an element normalized by another engine in this order.
  UEAElement import(const UEAElement& x, const PBWAlgebra& from);

  Weight weight(const Monomial& m) const;
  /// Common weight of all terms; Error(Inhomogeneous) when they differ.
  /// Zero for the zero element.
  Weight weight(const UEAElement& x) const;
  bool odd(const Monomial& m) const;

  /// Monomial for a multiset of basis ids; Error(WrongOrder) if an odd
  /// generator repeats.
  Monomial monomial(std::vector<int> basis_ids) const;
  std::vector<int> basis_ids(const Monomial& m) const;

  /// "c · f_{a}^{k} ..." terms in monomial order, joined by " + ".
  std::string render(const UEAElement& x, std::string_view suffix = "") const;
  std::string render(const Monomial& m) const;

 private:
  const UEAElement& lmul(int pos, const Monomial& m);

  std::shared_ptr<const BracketTable> table_;
  PBWOrder order_;
  std::vector<bool> odd_;      // by position
  std::vector<GVector> half_square_;  // by position: ½[x,x] with ids mapped to positions
  std::vector<std::vector<GVector>> bracket_;  // by positions, ids mapped to positions
  std::vector<std::unordered_map<Monomial, UEAElement, MonomialHash>> memo_;
};

}  // namespace singvec
