#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "singvec/verma.hpp"

namespace singvec {

/// One point of a verification grid: <lambda, h_gamma> = N.
struct CaseParams {
  CaseId id;
  int N = 1;
  Weight lambda;

  /// (N - 1) / 2 for the cases where gamma is odd.
  int M() const { return (N - 1) / 2; }
};

/// u = e_1 ... e_k f^power v+ as basis ids of g.
struct CandidateFormula {
  std::vector<int> raising;  // odd positive root vectors, left to right
  int lowering = -1;         // f_gamma
  int power = 0;
};

/// Throws ParityViolation for even N when gamma is odd, InvalidParams for N < 1.
void check_admissible(const AlgebraData& alg, int N);

CandidateFormula candidate_formula(const BracketTable& table, int N);

/// Integer coordinates in [-3, 3] drawn from seed, then one coordinate moved
/// so that <lambda, h_gamma> = N.
Weight default_lambda(const AlgebraData& alg, int N, std::uint64_t seed);

/// Validates N against lambda (when both are known) and fills the missing one.
CaseParams make_params(const AlgebraData& alg, std::optional<int> N, std::optional<Weight> lambda,
                       std::uint64_t seed);

/// The candidate vector in M(params.lambda); module.lambda() must match.
VermaVector candidate_u(VermaModule& module, const CaseParams& params);

/// Same product with the odd factors reordered: factor k of the result is
/// factor perm[k] of the candidate product.
VermaVector permuted_u(VermaModule& module, const CaseParams& params, const std::vector<int>& perm);

/// +1 or -1 when v = ±u, 0 otherwise.
int sign_relation(const VermaVector& v, const VermaVector& u);

// ---------------------------------------------------------------------------
// Witness monomials for nonvanishing.

/// Negative block order of the reference PBW basis for the case (negatives
/// not displayed in that basis come first).
PBWOrder reference_order(const BracketTable& table);

struct WitnessStep {
  std::string name;       // "v0", "v1", ...
  std::string monomial;   // rendered witness
  Rational coefficient;   // coefficient of the witness in the partial product
  std::size_t terms = 0;  // term count of the partial product
};

struct WitnessReport {
  bool pass = false;
  std::vector<WitnessStep> steps;
};

/// Coefficient of the multiset `witness` (basis ids) in the normal form of
/// u. The module's engine must use reference_order(); otherwise WrongOrder.
Rational coefficient_witness(VermaModule& module, const CaseParams& params, const std::vector<int>& witness);

/// Basis ids of the v_0 witness for F31 and G3 (used against u itself).
std::vector<int> leading_witness(const BracketTable& table, const CaseParams& params);

/// Evaluates the whole chain v_k in u_k; module must use reference_order().
WitnessReport witness_chain(VermaModule& module, const CaseParams& params);

// ---------------------------------------------------------------------------
// Orbit propagation.

struct ShapovalovElement {
  RootDatum beta;
  int C = 0;
  UEAElement theta;
  Weight mu;
  std::shared_ptr<PBWAlgebra> engine;  // order theta is normalized in
};

struct OrbitStep {
  std::string beta_from;
  std::string kappa;
  std::string beta_to;
  int p = 0;
  int exponent = 0;  // p - C<beta, h_kappa>
  Weight mu;
  Weight nu;
  bool round_trip = false;
  bool x_singular = false;
  bool theta_singular = false;
  bool weight_ok = false;
  std::size_t x_terms = 0;
  std::size_t theta_terms = 0;
  std::string failure;

  bool pass() const { return round_trip && x_singular && theta_singular && weight_ok; }
};

/// One step: X = f_kappa^{p - C<beta,h_kappa>} theta, theta' = X / f_kappa^p.
/// Requires <mu, h_kappa> = p > 0 and <mu, h_beta> = C.
ShapovalovElement orbit_propagate(const ShapovalovElement& shap, const RootDatum& kappa, int p, OrbitStep& step);

/// Sequence of (beta, kappa) from gamma down to the target root.
struct OrbitPath {
  std::vector<RootDatum> roots;   // beta_0 = gamma, ..., target
  std::vector<RootDatum> kappas;  // kappa_t maps roots[t] to roots[t+1]
};

/// target: {i} for B-I (delta_i), B-II (eps_i), D-I (2 delta_i);
/// {i, j} with i < j for D-II (eps_i + eps_j). 1-based.
OrbitPath orbit_path(const AlgebraData& alg, const std::vector<int>& target);

/// mu_1 with <mu_1, h_gamma> = C and <mu_t, h_kappa_t> = p along the path.
Weight orbit_start_weight(const AlgebraData& alg, const OrbitPath& path, int C, int p, std::uint64_t seed);

struct OrbitReport {
  bool pass = false;
  std::vector<OrbitStep> steps;
  bool start_singular = false;
  std::string failure;
};

OrbitReport run_orbit(std::shared_ptr<const BracketTable> table, const std::vector<int>& target, int C, int p,
                      std::uint64_t seed);

}  // namespace singvec
