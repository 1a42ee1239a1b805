#pragma once

#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "singvec/pbw.hpp"

namespace singvec {

/// body · v+ in M(lambda); body lies in U(n^-).
struct VermaVector {
  UEAElement body;
  Weight lambda;

  bool is_zero() const noexcept { return body.is_zero(); }
  friend bool operator==(const VermaVector& a, const VermaVector& b) {
    return a.lambda == b.lambda && a.body == b.body;
  }
};

struct ResidualEntry {
  std::string root;         // label of the positive root applied
  std::size_t terms = 0;    // term count of e_root · v
  std::string residual;     // rendered e_root · v when nonzero
};

struct SingularityReport {
  bool singular = false;
  bool nonzero = false;
  std::vector<ResidualEntry> entries;
};

/// M(lambda) = U(g) ⊗_{U(b+)} C_{lambda - rho}. Shares the engine's
/// normal-form order and memo tables; not safe for concurrent use.
class VermaModule {
 public:
  VermaModule(std::shared_ptr<PBWAlgebra> engine, Weight lambda);

  PBWAlgebra& engine() noexcept { return *engine_; }
  const PBWAlgebra& engine() const noexcept { return *engine_; }
  const Weight& lambda() const noexcept { return lambda_; }
  /// lambda - rho, the weight of v+.
  const Weight& top_weight() const noexcept { return top_; }

  VermaVector highest() const;
  /// Wraps a U(n^-) element; Error(WrongOrder) if it has other generators.
  VermaVector make(UEAElement body) const;

  VermaVector act(int basis_id, const VermaVector& v);
  /// x · v for x in U(g) (normalized in this module's engine).
  VermaVector act(const UEAElement& x, const VermaVector& v);
  /// x_1 (x_2 (... (x_k v))).
  VermaVector act_word(const std::vector<int>& basis_ids, const VermaVector& v);

  /// lambda - rho + weight(body); Error(Inhomogeneous) for mixed bodies.
  Weight weight_of(const VermaVector& v) const;

  /// Nonzero and killed by every simple root vector (every positive root
  /// vector when all_positive is set).
  SingularityReport is_singular(const VermaVector& v, bool all_positive = false);

  std::string render(const VermaVector& v) const { return engine_->render(v.body, "v⁺"); }

 private:
  void act_into(int pos, const Monomial& m, const Rational& c, UEAElement& out);
  const UEAElement& act_positive(int pos, const Monomial& m);

  std::shared_ptr<PBWAlgebra> engine_;
  Weight lambda_;
  Weight top_;
  std::vector<Rational> top_pairing_;  // <lambda - rho, h_k>
  std::vector<std::unordered_map<Monomial, UEAElement, MonomialHash>> memo_;
};

}  // namespace singvec
