#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "singvec/rational.hpp"
#include "singvec/root_data.hpp"

namespace singvec {

enum class BasisKind { NegativeRoot, Cartan, PositiveRoot };

struct BasisElement {
  BasisKind kind = BasisKind::Cartan;
  int root = -1;    // index into AlgebraData::positive_roots() for root kinds
  int cartan = -1;  // simple-root index for the Cartan kind
  bool odd = false;
};

struct Term {
  int index;
  Rational coeff;
  friend bool operator==(const Term&, const Term&) = default;
};

/// Element of g: sorted by basis index, no zero coefficients.
using GVector = std::vector<Term>;

/// y += a * x
void axpy(GVector& y, const Rational& a, const GVector& x);

/// Basis n^- (one f per positive root), h (one element per simple root), n^+,
/// together with the full supercommutator table.
///
/// Cartan basis: h_i = [e_i, f_i] for the simple generators, normalised so that
/// <mu, h_i> = 2(mu, a_i)/(a_i, a_i) for non-isotropic a_i and (mu, a_i) for the
/// isotropic one.
class BracketTable {
 public:
  const AlgebraData& algebra() const noexcept { return *alg_; }
  const std::shared_ptr<const AlgebraData>& algebra_ptr() const noexcept { return alg_; }

  std::size_t dim() const noexcept { return basis_.size(); }
  int num_roots() const noexcept { return static_cast<int>(algebra().positive_roots().size()); }
  int rank() const noexcept { return static_cast<int>(algebra().rank()); }

  const BasisElement& element(int id) const { return basis_.at(static_cast<std::size_t>(id)); }
  int negative(int root) const noexcept { return root; }
  int cartan(int simple) const noexcept { return num_roots() + simple; }
  int positive(int root) const noexcept { return num_roots() + rank() + root; }
  /// Basis id of the root vector of weight w (w positive or negative).
  std::optional<int> root_vector(const Weight& w) const;
  /// Basis id of the root vector named by a label such as "-d1+e2".
  int root_vector(std::string_view label) const;

  bool odd(int id) const { return element(id).odd; }
  Weight weight(int id) const;

  const GVector& bracket(int a, int b) const {
    return table_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
  }
  GVector bracket(int a, const GVector& y) const;
  GVector bracket(const GVector& x, const GVector& y) const;

  /// <mu, h_i> for the i-th Cartan basis element.
  Rational evaluate(const Weight& mu, int simple) const;
  /// <mu, h> for an element of h given in the Cartan basis.
  Rational evaluate(const Weight& mu, const GVector& h) const;
  /// The weight w with <mu, h> = (mu, w) for all mu.
  Weight cartan_dual(const GVector& h) const;
  /// h_beta for a non-isotropic root as a combination of the Cartan basis.
  GVector coroot(const Weight& beta) const;

  /// For a non-simple root vector x = [g, y]: the pair (g, y) of basis ids
  /// used to define it. Empty for simple generators and Cartan elements.
  std::optional<std::pair<int, int>> construction(int id) const;

  std::string label(int id) const;
  std::string render(const GVector& x) const;
  /// "[x, y] = c·z + ..." for every nonzero bracket, in basis order.
  std::string dump() const;

  /// Negates [a, b] and [b, a]. Used for fault injection in tests.
  void flip_sign(int a, int b);

 private:
  friend BracketTable build_structure_constants(std::shared_ptr<const AlgebraData> alg);

  std::shared_ptr<const AlgebraData> alg_;
  std::vector<BasisElement> basis_;
  std::vector<std::vector<GVector>> table_;
  std::vector<Rational> cartan_scale_;
  std::vector<std::optional<std::pair<int, int>>> construction_;
};

/// Builds g as the contragredient superalgebra of the simple system: n^- and
/// n^+ are generated level by level from the simple generators, each new
/// root vector is the first nonzero [f_i, f_beta] (resp. [e_i, e_beta]) in
/// simple-root order, and all brackets follow from super-Jacobi.
/// Throws Error(ClosureFailure) if the generated roots do not match the
/// root lists or a root space is not one-dimensional.
BracketTable build_structure_constants(std::shared_ptr<const AlgebraData> alg);

struct JacobiReport {
  bool pass = true;
  std::size_t pairs_checked = 0;
  std::size_t triples_checked = 0;
  std::size_t violations = 0;
  std::string first_violation;
  std::vector<int> witness;  // basis ids of the first violating pair or triple
};

/// Exhaustive super-antisymmetry and super-Jacobi over all basis pairs/triples.
JacobiReport check_jacobi(const BracketTable& table);

struct GradingReport {
  bool pass = true;
  std::string first_violation;
  /// c_alpha with [e_alpha, f_alpha] dual to c_alpha * alpha, per positive root.
  std::vector<Rational> cartan_factor;
};

/// Weight grading of every bracket and [e_a, f_a] = nonzero multiple of the
/// dual of a, for all positive roots.
GradingReport check_grading(const BracketTable& table);

struct RescalingReport {
  bool pass = false;
  /// One line per relation: our bracket next to the reference value.
  std::vector<std::string> relations;
  std::string failure;
};

/// B-II only. The reference list of nine brackets among e_{±d_m},
/// e_{e_n±d_m}, e_{d_m-e_n}, e_{-d_m-e_n}, e_{e_n} and f_{e_n}
///   [e_{e+d}, f_e] = -e_d        [e_{e-d}, f_e] = -e_{-d}
///   [e_d, f_e] = e_{d-e}         [e_{-d}, f_e] = e_{-d-e}
///   [e_{e-d}, e_{d-e}] = ½(h_d + h_e)
///   [e_{e-d}, e_d] = -e_e        [e_d, e_{-d}] = ½h_d
///   [e_d, e_{-d-e}] = -f_e       [e_{d-e}, e_{-d}] = f_e
/// holds for some nonzero rescaling of those eight root vectors iff the
/// multiplicative system t_a t_b / t_c = ratio is solvable over C*.
RescalingReport match_commutation_list(const BracketTable& table);

}  // namespace singvec
