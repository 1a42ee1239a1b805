#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "singvec/singular_vectors.hpp"

namespace singvec {

/// "3", "1..3", "1,3,5" (mixable: "1..3,7"). Error(Parse) otherwise.
std::vector<long> parse_grid(std::string_view text);

struct CheckSet {
  bool nonzero = true;
  bool singular = true;
  bool lemma31 = true;
  bool witness = true;

  /// "nonzero", "singular", "lemma31", "witness", "all", or a comma list.
  static CheckSet parse(std::string_view text);
};

struct VerificationReport {
  CaseId id;
  int N = 0;
  std::uint64_t seed = 0;
  Weight lambda;
  std::string gamma;
  Weight weight_drop;  // N gamma
  std::size_t u_terms = 0;

  // Flags for checks that were not requested stay empty.
  std::optional<bool> nonzero;
  bool weight_ok = false;
  std::optional<bool> singular;
  std::optional<bool> lemma31_ok;
  std::optional<bool> witness_ok;

  std::vector<ResidualEntry> residuals;  // per simple root
  int lemma31_plus = 0;
  int lemma31_minus = 0;
  std::vector<WitnessStep> witnesses;
  std::string counterexample;
  double elapsed_ms = 0;

  bool passed() const;
};

/// Runs the requested checks at one grid point.
VerificationReport verify_point(std::shared_ptr<const BracketTable> table, const CaseParams& params,
                                std::uint64_t seed, const CheckSet& checks);

struct VerifyRequest {
  Family family = Family::BI;
  std::vector<long> m{0};
  std::vector<long> n{0};
  std::vector<long> N;
  std::optional<std::string> lambda;  // raw comma list; fixes a single grid point
  std::vector<long> seeds{0};
  CheckSet checks;
  unsigned jobs = 0;  // 0: hardware concurrency
};

/// Expands the grid, validates every point up front (throws Error before any
/// work starts) and runs the points on a worker pool. Reports come back in
/// grid order (m, n, N, seed) regardless of completion order.
std::vector<VerificationReport> run_verify(const VerifyRequest& req);

std::string report_json(const VerificationReport& r, bool timing);
std::string report_text(const VerificationReport& r, bool timing);

struct OrbitRequest {
  CaseId id;
  std::vector<int> target;
  std::vector<long> C{1};
  int p = 1;
  std::uint64_t seed = 0;
};

struct OrbitResult {
  CaseId id;
  int C = 0;
  int p = 0;
  std::uint64_t seed = 0;
  std::vector<int> target;
  OrbitReport report;
};

std::vector<OrbitResult> run_orbit_campaign(const OrbitRequest& req);
std::string orbit_json(const OrbitResult& r);
std::string orbit_text(const OrbitResult& r);

struct SelftestOutcome {
  std::string case_label;
  std::string check;
  bool pass = false;
  std::string detail;
};

struct SelftestOptions {
  std::optional<Family> family;
  bool inject_sign_fault = false;
  std::uint64_t seed = 0;
  int associativity_samples = 40;
};

/// Invariant suite at the smallest parameters of each case.
std::vector<SelftestOutcome> run_selftest(const SelftestOptions& opts);

/// Smallest valid case of a family.
CaseId smallest_case(Family f);

/// Flips one bracket of two positive root vectors (first nonzero one in
/// basis order); returns its description.
std::string inject_sign_fault(BracketTable& table);

/// Random element: up to `terms` words of up to `length` generators drawn
/// from `pool` (basis ids), coefficients in {-3..3}/{1..2}.
UEAElement random_element(PBWAlgebra& engine, std::mt19937_64& rng, const std::vector<int>& pool, int terms,
                          int length);

}  // namespace singvec
