#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "singvec/rational.hpp"
#include "singvec/weight.hpp"

namespace singvec {

/// The six simple systems: osp(2n+1|2m) standard (B-I) and opposite (B-II),
/// osp(2n|2m) standard (D-I) and opposite (D-II), F(3|1), G(3).
enum class Family { BI, BII, DI, DII, F31, G3 };

std::string_view to_string(Family f);
Family parse_family(std::string_view text);
/// B and D families carry (m, n); F31 and G3 do not.
bool has_rank_params(Family f);

struct CaseId {
  Family family = Family::BI;
  int m = 0;
  int n = 0;

  friend bool operator==(const CaseId&, const CaseId&) = default;
  friend auto operator<=>(const CaseId&, const CaseId&) = default;
};

/// "B-I:m=2,n=1", "F31", "G3".
std::string to_string(const CaseId& c);
CaseId parse_case_id(std::string_view text);
/// Throws Error(InvalidParams) when m or n is below the family minimum.
void validate(const CaseId& c);

enum class Parity { Even, OddIsotropic, OddNonisotropic };

std::string_view to_string(Parity p);
inline bool is_odd(Parity p) { return p != Parity::Even; }

struct RootDatum {
  Weight weight;
  Parity parity = Parity::Even;
  bool positive = true;
  /// Index of the positive representative in AlgebraData::positive_roots().
  int index = -1;

  bool odd() const { return is_odd(parity); }
  friend bool operator==(const RootDatum& a, const RootDatum& b) {
    return a.weight == b.weight && a.parity == b.parity && a.positive == b.positive;
  }
};

/// Root system, invariant form and Weyl vector of one case. Immutable after
/// construction.
class AlgebraData {
 public:
  const CaseId& case_id() const noexcept { return case_; }
  /// Number of coordinates of a weight (m+n, 4 for F31, 3 for G3).
  std::size_t dim() const noexcept { return labels_.size(); }
  std::size_t rank() const noexcept { return simple_.size(); }
  const std::vector<std::string>& basis_labels() const noexcept { return labels_; }
  const RationalMatrix& form_matrix() const noexcept { return form_; }

  const std::vector<RootDatum>& simple_roots() const noexcept { return simple_; }
  /// Even roots first, then odd; lexicographically descending within each block.
  const std::vector<RootDatum>& positive_roots() const noexcept { return positive_; }
  std::vector<RootDatum> pos_even() const;
  std::vector<RootDatum> pos_odd() const;

  /// Half-sum formula evaluated on the stored root lists.
  const Weight& rho() const noexcept { return rho_; }
  /// Closed form per case; must coincide with rho().
  const Weight& rho_closed_form() const noexcept { return rho_closed_; }
  const RootDatum& gamma() const noexcept { return gamma_; }
  /// Index into simple_roots() of the isotropic simple root.
  int isotropic_simple() const noexcept { return isotropic_simple_; }

  Rational form(const Weight& a, const Weight& b) const;
  Weight zero() const { return Weight(dim()); }
  Weight unit(std::size_t i) const;

  /// Looks up w or -w among the roots; the result carries the sign.
  std::optional<RootDatum> find_root(const Weight& w) const;
  const RootDatum& positive_root(int index) const { return positive_.at(index); }

  /// Coefficients of w in the simple-root basis.
  std::vector<Rational> simple_coordinates(const Weight& w) const;
  /// Sum of simple coordinates.
  Rational height(const Weight& w) const;

  /// Text label such as "d1-e2", "2d1", "+--+" (F31 odd roots) or "d+e3" (G3).
  std::string label(const Weight& w) const;
  /// Parses labels produced by label(), plus "e3" in G3 and sign tuples in F31.
  Weight parse_label(std::string_view text) const;
  /// Parses a root label; throws Error(Parse) if it is not a root.
  RootDatum parse_root(std::string_view text) const;

 private:
  friend AlgebraData build_algebra_data(const CaseId& c);

  CaseId case_;
  std::vector<std::string> labels_;
  RationalMatrix form_;
  std::vector<RootDatum> simple_;
  std::vector<RootDatum> positive_;
  Weight rho_;
  Weight rho_closed_;
  RootDatum gamma_;
  int isotropic_simple_ = -1;
  std::map<Weight, int> index_;
  RationalMatrix simple_inverse_;
};

AlgebraData build_algebra_data(const CaseId& c);

Rational bilinear_form(const Weight& a, const Weight& b, const AlgebraData& alg);
/// 2(lambda, beta)/(beta, beta); Error(IsotropicCoroot) when (beta, beta) = 0.
Rational coroot_pairing(const Weight& lambda, const Weight& beta, const AlgebraData& alg);
Rational coroot_pairing(const Weight& lambda, const RootDatum& beta, const AlgebraData& alg);
/// s_beta(lambda) = lambda - <lambda, h_beta> beta.
Weight reflect(const Weight& lambda, const Weight& beta, const AlgebraData& alg);
Weight reflect(const Weight& lambda, const RootDatum& beta, const AlgebraData& alg);
/// Positive representatives of the orbit of beta under the group generated by
/// reflections in non-isotropic simple roots, in positive_roots() order.
std::vector<RootDatum> wprime_orbit(const RootDatum& beta, const AlgebraData& alg);

}  // namespace singvec
