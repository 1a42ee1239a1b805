#include "singvec/singular_vectors.hpp"

#include <algorithm>
#include <random>

#include "singvec/error.hpp"

namespace singvec {

namespace {

bool is_osp(Family f) { return has_rank_params(f); }

Weight delta(const AlgebraData& a, int i) { return is_osp(a.case_id().family) ? a.unit(static_cast<std::size_t>(i - 1)) : a.unit(0); }

Weight eps(const AlgebraData& a, int j) {
  const auto& c = a.case_id();
  if (is_osp(c.family)) return a.unit(static_cast<std::size_t>(c.m + j - 1));
  if (c.family == Family::G3 && j == 3) return -(a.unit(1) + a.unit(2));
  return a.unit(static_cast<std::size_t>(j));
}

/// F(3|1) odd root ½(s0 δ + s1 ε1 + s2 ε2 + s3 ε3) from a sign string like "+--+".
Weight signs(const AlgebraData& a, std::string_view s) {
  Weight w = a.zero();
  for (std::size_t k = 0; k < 4; ++k) w[k] = Rational(s[k] == '+' ? 1 : -1, 2);
  return w;
}

int vec(const BracketTable& t, const Weight& w) {
  auto id = t.root_vector(w);
  if (!id) throw Error(ErrorKind::ClosureFailure, t.algebra().label(w) + " is not a root");
  return *id;
}

void repeat(std::vector<int>& out, int id, int k) {
  for (int i = 0; i < k; ++i) out.push_back(id);
}

/// Odd positive root vectors of the candidate vector, left to right.
std::vector<Weight> raising_roots(const AlgebraData& a) {
  const auto& c = a.case_id();
  std::vector<Weight> r;
  switch (c.family) {
    case Family::BI:
    case Family::DI:
      for (int i = 1; i <= c.n; ++i) {
        r.push_back(delta(a, c.m) - eps(a, i));
        r.push_back(delta(a, c.m) + eps(a, i));
      }
      break;
    case Family::BII:
      for (int i = 1; i <= c.m; ++i) {
        r.push_back(eps(a, c.n) - delta(a, i));
        r.push_back(eps(a, c.n) + delta(a, i));
      }
      break;
    case Family::DII:
      for (int k : {c.n, c.n - 1})
        for (int i = 1; i <= c.m; ++i) {
          r.push_back(eps(a, k) - delta(a, i));
          r.push_back(eps(a, k) + delta(a, i));
        }
      break;
    case Family::F31:
      for (auto s : {"+---", "+--+", "+-+-", "+-++", "++--", "++-+", "+++-", "++++"}) r.push_back(signs(a, s));
      break;
    case Family::G3:
      for (int i = 1; i <= 3; ++i) {
        r.push_back(delta(a, 1) - eps(a, i));
        r.push_back(delta(a, 1) + eps(a, i));
      }
      break;
  }
  return r;
}

int lowering_power(const AlgebraData& a, int N) {
  const auto& c = a.case_id();
  switch (c.family) {
    case Family::BI: return N + 2 * c.n;
    case Family::BII: return N + 2 * c.m;
    case Family::DI: return N + c.n;
    case Family::DII: return N + 2 * c.m;
    case Family::F31: return N + 4;
    case Family::G3: return N + 6;
  }
  return N;
}

}  // namespace

void check_admissible(const AlgebraData& alg, int N) {
  if (N < 1) throw Error(ErrorKind::InvalidParams, "N must be a positive integer, got " + std::to_string(N));
  if (alg.gamma().odd() && N % 2 == 0)
    throw Error(ErrorKind::ParityViolation, "N = " + std::to_string(N) + " must be odd for " + to_string(alg.case_id()));
}

CandidateFormula candidate_formula(const BracketTable& table, int N) {
  const auto& a = table.algebra();
  check_admissible(a, N);
  CandidateFormula f;
  for (const auto& w : raising_roots(a)) f.raising.push_back(vec(table, w));
  f.lowering = vec(table, -a.gamma().weight);
  f.power = lowering_power(a, N);
  return f;
}

Weight default_lambda(const AlgebraData& alg, int N, std::uint64_t seed) {
  check_admissible(alg, N);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dist(-3, 3);
  Weight lambda = alg.zero();
  for (std::size_t i = 0; i < lambda.size(); ++i) lambda[i] = dist(rng);
  const Rational current = coroot_pairing(lambda, alg.gamma(), alg);
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    const Rational d = coroot_pairing(alg.unit(i), alg.gamma(), alg);
    if (d == 0) continue;
    lambda[i] += (Rational(N) - current) / d;
    return lambda;
  }
  throw Error(ErrorKind::InvalidParams, "gamma pairs trivially with every coordinate");
}

CaseParams make_params(const AlgebraData& alg, std::optional<int> N, std::optional<Weight> lambda, std::uint64_t seed) {
  CaseParams p;
  p.id = alg.case_id();
  if (lambda) {
    if (lambda->size() != alg.dim())
      throw Error(ErrorKind::InvalidParams, "lambda needs " + std::to_string(alg.dim()) + " coordinates");
    const Rational pairing = coroot_pairing(*lambda, alg.gamma(), alg);
    long value = 0;
    if (!to_int(pairing, value) || value < 1)
      throw Error(ErrorKind::InvalidParams, "<lambda, h_gamma> = " + to_string(pairing) + " is not a positive integer");
    if (N && *N != value)
      throw Error(ErrorKind::InvalidParams,
                  "N = " + std::to_string(*N) + " disagrees with <lambda, h_gamma> = " + std::to_string(value));
    p.N = static_cast<int>(value);
    check_admissible(alg, p.N);
    p.lambda = *lambda;
  } else {
    if (!N) throw Error(ErrorKind::InvalidParams, "either N or lambda is required");
    p.N = *N;
    p.lambda = default_lambda(alg, p.N, seed);
  }
  return p;
}

VermaVector permuted_u(VermaModule& module, const CaseParams& params, const std::vector<int>& perm) {
  if (module.lambda() != params.lambda) throw Error(ErrorKind::InvalidParams, "module highest weight differs from params");
  const auto f = candidate_formula(module.engine().table(), params.N);
  if (perm.size() != f.raising.size())
    throw Error(ErrorKind::InvalidParams, "permutation must have " + std::to_string(f.raising.size()) + " entries");
  std::vector<int> sorted = perm;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t k = 0; k < sorted.size(); ++k)
    if (sorted[k] != static_cast<int>(k)) throw Error(ErrorKind::InvalidParams, "not a permutation");
  std::vector<int> word;
  for (int k : perm) word.push_back(f.raising[static_cast<std::size_t>(k)]);
  repeat(word, f.lowering, f.power);
  return module.act_word(word, module.highest());
}

VermaVector candidate_u(VermaModule& module, const CaseParams& params) {
  const auto f = candidate_formula(module.engine().table(), params.N);
  std::vector<int> identity(f.raising.size());
  for (std::size_t k = 0; k < identity.size(); ++k) identity[k] = static_cast<int>(k);
  return permuted_u(module, params, identity);
}

int sign_relation(const VermaVector& v, const VermaVector& u) {
  if (v.body == u.body) return 1;
  if (v.body == Rational(-1) * u.body) return -1;
  return 0;
}

// ---------------------------------------------------------------------------

namespace {

/// (i, j) pairs with i < j in [lo, hi], by decreasing i + j (then decreasing j).
std::vector<std::pair<int, int>> index_pairs(int lo, int hi) {
  std::vector<std::pair<int, int>> v;
  for (int i = lo; i <= hi; ++i)
    for (int j = i + 1; j <= hi; ++j) v.push_back({i, j});
  std::stable_sort(v.begin(), v.end(), [](const auto& x, const auto& y) {
    if (x.first + x.second != y.first + y.second) return x.first + x.second > y.first + y.second;
    return x.second > y.second;
  });
  return v;
}

std::vector<Weight> reference_negatives(const AlgebraData& a) {
  const auto& c = a.case_id();
  const int m = c.m;
  const int n = c.n;
  std::vector<Weight> s;
  switch (c.family) {
    case Family::BI:
      for (int q = n; q >= 1; --q) s.push_back(-eps(a, q));
      [[fallthrough]];
    case Family::DI:
      for (auto [i, j] : index_pairs(1, n)) {
        s.push_back(-eps(a, j) - eps(a, i));
        s.push_back(eps(a, j) - eps(a, i));
      }
      for (int q = n; q >= 1; --q) {
        s.push_back(-delta(a, m) + eps(a, q));
        s.push_back(-delta(a, m) - eps(a, q));
      }
      if (c.family == Family::BI) s.push_back(-delta(a, m));
      s.push_back(-2 * delta(a, m));
      break;
    case Family::BII:
    case Family::DII: {
      const bool d = c.family == Family::DII;
      for (int p = m; p >= 1; --p) s.push_back(d ? -2 * delta(a, p) : -delta(a, p));
      for (auto [i, j] : index_pairs(1, m)) {
        s.push_back(-delta(a, j) - delta(a, i));
        s.push_back(delta(a, j) - delta(a, i));
      }
      for (int p = m; p >= 1; --p) {
        s.push_back(-eps(a, n) + delta(a, p));
        s.push_back(-eps(a, n) - delta(a, p));
        if (d) {
          s.push_back(-eps(a, n - 1) + delta(a, p));
          s.push_back(-eps(a, n - 1) - delta(a, p));
        }
      }
      if (d) {
        s.push_back(eps(a, n) - eps(a, n - 1));
        s.push_back(-eps(a, n - 1) - eps(a, n));
      } else {
        s.push_back(-eps(a, n));
      }
      break;
    }
    case Family::F31:
      for (int q = 3; q >= 1; --q) s.push_back(-eps(a, q));
      for (auto [i, j] : std::vector<std::pair<int, int>>{{2, 3}, {1, 3}, {1, 2}}) {
        s.push_back(-eps(a, i) - eps(a, j));
        s.push_back(-eps(a, i) + eps(a, j));
      }
      for (auto t : {"-+++", "-++-", "-+-+", "-+--", "--++", "--+-", "---+", "----"}) s.push_back(signs(a, t));
      s.push_back(-delta(a, 1));
      break;
    case Family::G3: {
      const Weight d = delta(a, 1);
      s = {eps(a, 3), -eps(a, 2), -eps(a, 1), eps(a, 3) - eps(a, 2), eps(a, 3) - eps(a, 1), eps(a, 1) - eps(a, 2)};
      for (int i : {3, 2, 1}) {
        s.push_back(-d + eps(a, i));
        s.push_back(-d - eps(a, i));
      }
      s.push_back(-d);
      s.push_back(-2 * d);
      break;
    }
  }
  return s;
}

/// u_k = groups[k] groups[k+1] ... base v+, with witness v_k for each k.
struct Chain {
  int first_index = 0;
  std::vector<std::vector<int>> groups;
  std::vector<int> base;
  std::vector<std::vector<int>> witness;  // groups.size() + 1 entries
};

Chain build_chain(const BracketTable& t, const CaseParams& params) {
  const auto& a = t.algebra();
  const auto& c = a.case_id();
  const int m = c.m;
  const int n = c.n;
  const int N = params.N;
  const int M = params.M();
  Chain ch;
  auto v = [&](const Weight& w) { return vec(t, w); };
  auto words = [&](std::initializer_list<Weight> ws) {
    std::vector<int> out;
    for (const auto& w : ws) out.push_back(v(w));
    return out;
  };
  switch (c.family) {
    case Family::BI: {
      ch.first_index = 1;
      const int fd = v(-delta(a, m));
      const int f2d = v(-2 * delta(a, m));
      for (int k = 1; k <= n; ++k) {
        ch.groups.push_back(words({delta(a, m) - eps(a, k), delta(a, m) + eps(a, k)}));
        std::vector<int> w{v(-eps(a, n))};
        for (int j = n; j > k; --j) w.push_back(v(eps(a, j) - eps(a, j - 1)));
        w.push_back(v(-delta(a, m) + eps(a, k)));
        repeat(w, f2d, M + k - 1);
        ch.witness.push_back(w);
      }
      ch.base = {fd};
      repeat(ch.base, f2d, M + n);
      ch.witness.push_back(ch.base);
      break;
    }
    case Family::BII: {
      ch.first_index = 1;
      const int f = v(-eps(a, n));
      for (int k = 1; k <= m; ++k) {
        ch.groups.push_back(words({eps(a, n) - delta(a, k), eps(a, n) + delta(a, k)}));
        std::vector<int> w{v(-delta(a, m))};
        for (int j = m; j > k; --j) w.push_back(v(delta(a, j) - delta(a, j - 1)));
        w.push_back(v(-eps(a, n) + delta(a, k)));
        repeat(w, f, N + 2 * k - 3);
        ch.witness.push_back(w);
      }
      repeat(ch.base, f, N + 2 * m);
      ch.witness.push_back(ch.base);
      break;
    }
    case Family::DI: {
      ch.first_index = 1;
      const int f = v(-2 * delta(a, m));
      for (int k = 1; k <= n; ++k) {
        ch.groups.push_back(words({delta(a, m) - eps(a, k), delta(a, m) + eps(a, k)}));
        std::vector<int> w;
        for (int j = n; j > k; --j) w.push_back(v(eps(a, j) - eps(a, j - 1)));
        w.push_back(v(-delta(a, m) - eps(a, n)));
        w.push_back(v(-delta(a, m) + eps(a, k)));
        repeat(w, f, N + k - 2);
        ch.witness.push_back(w);
      }
      repeat(ch.base, f, N + n);
      ch.witness.push_back(ch.base);
      break;
    }
    case Family::DII: {
      ch.first_index = 1;
      const int f = v(-eps(a, n - 1) - eps(a, n));
      for (int k = 1; k <= m; ++k) {
        ch.groups.push_back(words({eps(a, n) - delta(a, k), eps(a, n) + delta(a, k), eps(a, n - 1) - delta(a, k),
                                   eps(a, n - 1) + delta(a, k)}));
        std::vector<int> w{v(-2 * delta(a, m))};
        for (int j = m; j > k; --j) repeat(w, v(delta(a, j) - delta(a, j - 1)), 2);
        w.push_back(v(-eps(a, n) + delta(a, k)));
        w.push_back(v(-eps(a, n - 1) + delta(a, k)));
        repeat(w, f, N + 2 * k - 3);
        ch.witness.push_back(w);
      }
      repeat(ch.base, f, N + 2 * m);
      ch.witness.push_back(ch.base);
      break;
    }
    case Family::F31: {
      const int f = v(-delta(a, 1));
      for (int k : candidate_formula(t, N).raising) ch.groups.push_back({k});
      const Weight e3 = eps(a, 3), e2 = eps(a, 2), e1 = eps(a, 1);
      const std::vector<std::vector<Weight>> vs = {
          {-e3, e3 - e2, e2 - e1, signs(a, "-+++"), signs(a, "-+--")},
          {e3 - e2, e2 - e1, signs(a, "-+++"), signs(a, "-++-"), signs(a, "-+--")},
          {e2 - e1, signs(a, "-+++"), signs(a, "-++-"), signs(a, "-+-+"), signs(a, "-+--")},
          {signs(a, "-+++"), signs(a, "-++-"), signs(a, "-+-+"), signs(a, "-+--"), signs(a, "--++")},
          {signs(a, "-+++"), signs(a, "-++-"), signs(a, "-+-+"), signs(a, "-+--")},
          {signs(a, "-+++"), signs(a, "-++-"), signs(a, "-+-+")},
          {signs(a, "-+++"), signs(a, "-++-")},
          {signs(a, "-+++")},
          {}};
      const int powers[] = {N - 1, N - 1, N - 1, N - 1, N, N + 1, N + 2, N + 3, N + 4};
      for (std::size_t k = 0; k < vs.size(); ++k) {
        std::vector<int> w;
        for (const auto& x : vs[k]) w.push_back(v(x));
        repeat(w, f, powers[k]);
        ch.witness.push_back(w);
      }
      repeat(ch.base, f, N + 4);
      break;
    }
    case Family::G3: {
      check_admissible(a, N);
      const Weight d = delta(a, 1), e1 = eps(a, 1), e2 = eps(a, 2), e3 = eps(a, 3);
      for (const auto& w : {d + e1, d + e2, d - e1, d - e2, d + e3, d - e3}) ch.groups.push_back({v(w)});
      const int fd = v(-d);
      const int f2d = v(-2 * d);
      const std::vector<std::vector<Weight>> vs = {{-e1, -e1, e1 - e2, -d - e3},
                                                   {-e1, -e1, -d - e3, -d - e2},
                                                   {-e1, -d + e3, -d - e3, -d - e2},
                                                   {-d + e3, -d - e3, -d - e2, -d},
                                                   {-d + e3, -d - e3, -d},
                                                   {-d - e3, -d},
                                                   {-d}};
      const int powers[] = {M, M, M, M, M + 1, M + 2, M + 3};
      for (std::size_t k = 0; k < vs.size(); ++k) {
        std::vector<int> w;
        for (const auto& x : vs[k]) w.push_back(v(x));
        repeat(w, f2d, powers[k]);
        ch.witness.push_back(w);
      }
      ch.base = {fd};
      repeat(ch.base, f2d, M + 3);
      break;
    }
  }
  return ch;
}

void require_reference_order(VermaModule& module) {
  if (!(module.engine().order() == reference_order(module.engine().table())))
    throw Error(ErrorKind::WrongOrder, "witness coefficients need the reference PBW order");
}

}  // namespace

PBWOrder reference_order(const BracketTable& table) {
  std::vector<int> seq;
  for (const auto& w : reference_negatives(table.algebra())) seq.push_back(vec(table, w));
  return PBWOrder::with_negative_sequence(table, seq);
}

Rational coefficient_witness(VermaModule& module, const CaseParams& params, const std::vector<int>& witness) {
  require_reference_order(module);
  const VermaVector u = candidate_u(module, params);
  return u.body.coeff(module.engine().monomial(witness));
}

std::vector<int> leading_witness(const BracketTable& table, const CaseParams& params) {
  const auto f = table.algebra().case_id().family;
  if (f != Family::F31 && f != Family::G3)
    throw Error(ErrorKind::InvalidParams, "a single leading witness is defined for F31 and G3 only");
  return build_chain(table, params).witness.front();
}

WitnessReport witness_chain(VermaModule& module, const CaseParams& params) {
  require_reference_order(module);
  if (module.lambda() != params.lambda) throw Error(ErrorKind::InvalidParams, "module highest weight differs from params");
  const Chain ch = build_chain(module.engine().table(), params);
  WitnessReport rep;
  rep.pass = true;
  VermaVector cur = module.act_word(ch.base, module.highest());
  for (int k = static_cast<int>(ch.groups.size()); k >= 0; --k) {
    if (k < static_cast<int>(ch.groups.size())) cur = module.act_word(ch.groups[static_cast<std::size_t>(k)], cur);
    const Monomial w = module.engine().monomial(ch.witness[static_cast<std::size_t>(k)]);
    WitnessStep s;
    s.name = "v" + std::to_string(ch.first_index + k);
    s.monomial = module.engine().render(w);
    s.coefficient = cur.body.coeff(w);
    s.terms = cur.body.size();
    if (s.coefficient == 0) rep.pass = false;
    rep.steps.push_back(std::move(s));
  }
  std::reverse(rep.steps.begin(), rep.steps.end());
  return rep;
}

// ---------------------------------------------------------------------------

ShapovalovElement orbit_propagate(const ShapovalovElement& shap, const RootDatum& kappa, int p, OrbitStep& step) {
  const auto& table = shap.engine->table();
  const auto& alg = table.algebra();
  if (kappa.odd() || !kappa.positive) throw Error(ErrorKind::InvalidParams, "kappa must be a positive even root");
  if (p < 1 || coroot_pairing(shap.mu, kappa, alg) != p)
    throw Error(ErrorKind::InvalidParams, "<mu, h_kappa> must equal p = " + std::to_string(p));
  if (coroot_pairing(shap.mu, shap.beta, alg) != shap.C)
    throw Error(ErrorKind::InvalidParams, "<mu, h_beta> must equal C = " + std::to_string(shap.C));
  const Rational q = -shap.C * coroot_pairing(shap.beta.weight, kappa, alg);
  long qi = 0;
  if (!to_int(q, qi) || qi < 0) throw Error(ErrorKind::InvalidParams, "kappa does not lower beta");

  const Weight beta2 = reflect(shap.beta.weight, kappa, alg);
  auto next_root = alg.find_root(beta2);
  if (!next_root) throw Error(ErrorKind::ClosureFailure, "reflected root " + alg.label(beta2) + " is missing");
  const int f = *table.root_vector(-kappa.weight);

  step.beta_from = alg.label(shap.beta.weight);
  step.kappa = alg.label(kappa.weight);
  step.beta_to = alg.label(beta2);
  step.p = p;
  step.exponent = p + static_cast<int>(qi);
  step.mu = shap.mu;
  step.nu = reflect(shap.mu, kappa, alg);

  auto engine = std::make_shared<PBWAlgebra>(shap.engine->table_ptr(), PBWOrder::standard(table, f));
  const UEAElement theta = engine->import(shap.theta, *shap.engine);
  UEAElement x = theta;
  for (int k = 0; k < step.exponent; ++k) x = engine->left_multiply(f, x);
  step.x_terms = x.size();

  UEAElement theta2 = engine->right_divide(x, f, p);
  step.theta_terms = theta2.size();
  step.round_trip = engine->multiply(theta2, engine->power(f, p)) == x;

  VermaModule big(engine, shap.mu);
  const auto rx = big.is_singular(big.make(x));
  step.x_singular = rx.singular;
  VermaModule small(engine, step.nu);
  const VermaVector t2 = small.make(theta2);
  const auto rt = small.is_singular(t2);
  step.theta_singular = rt.singular;

  // s_beta' nu - rho, with beta' = s_kappa beta and <nu, h_beta'> = C.
  const Weight target = reflect(step.nu, beta2, alg) - alg.rho();
  step.weight_ok = small.weight_of(t2) == target && big.weight_of(big.make(x)) == target &&
                   engine->weight(theta2) == Rational(-shap.C) * beta2;
  if (!step.round_trip) step.failure = "right division does not round-trip";
  for (const auto* r : {&rx, &rt})
    for (const auto& e : r->entries)
      if (step.failure.empty() && e.terms != 0) step.failure = "e_{" + e.root + "} leaves " + e.residual;
  if (step.failure.empty() && !step.weight_ok) step.failure = "weight mismatch";

  ShapovalovElement out;
  out.beta = *next_root;
  out.C = shap.C;
  out.theta = std::move(theta2);
  out.mu = step.nu;
  out.engine = engine;
  return out;
}

OrbitPath orbit_path(const AlgebraData& alg, const std::vector<int>& target) {
  const auto& c = alg.case_id();
  OrbitPath path;
  auto root = [&](const Weight& w) {
    auto r = alg.find_root(w);
    if (!r || !r->positive) throw Error(ErrorKind::ClosureFailure, alg.label(w) + " is not a positive root");
    return *r;
  };
  auto bad = [&](const std::string& why) { return Error(ErrorKind::InvalidParams, "orbit target: " + why); };
  switch (c.family) {
    case Family::BI:
    case Family::BII:
    case Family::DI: {
      const bool d = c.family != Family::BII;
      const int top = d ? c.m : c.n;
      if (target.size() != 1) throw bad("expects one index");
      const int t = target[0];
      if (t < 1 || t > top) throw bad("index out of range 1.." + std::to_string(top));
      auto beta = [&](int i) {
        if (c.family == Family::BI) return delta(alg, i);
        if (c.family == Family::DI) return 2 * delta(alg, i);
        return eps(alg, i);
      };
      path.roots.push_back(root(beta(top)));
      for (int i = top; i > t; --i) {
        path.kappas.push_back(root(d ? delta(alg, i - 1) - delta(alg, i) : eps(alg, i - 1) - eps(alg, i)));
        path.roots.push_back(root(beta(i - 1)));
      }
      break;
    }
    case Family::DII: {
      if (target.size() != 2) throw bad("expects a pair i,j");
      const int ti = target[0];
      const int tj = target[1];
      if (!(1 <= ti && ti < tj && tj <= c.n)) throw bad("needs 1 <= i < j <= " + std::to_string(c.n));
      int i = c.n - 1;
      int j = c.n;
      path.roots.push_back(root(eps(alg, i) + eps(alg, j)));
      while (i != ti || j != tj) {
        if (j > tj && j - 1 > i) {
          path.kappas.push_back(root(eps(alg, j - 1) - eps(alg, j)));
          --j;
        } else if (i > ti) {
          path.kappas.push_back(root(eps(alg, i - 1) - eps(alg, i)));
          --i;
        } else {
          throw bad("unreachable");
        }
        path.roots.push_back(root(eps(alg, i) + eps(alg, j)));
      }
      break;
    }
    case Family::F31:
    case Family::G3:
      throw bad("no orbit propagation for " + to_string(c));
  }
  return path;
}

Weight orbit_start_weight(const AlgebraData& alg, const OrbitPath& path, int C, int p, std::uint64_t seed) {
  // Constraint roots for mu_1: gamma, then kappa_t pulled back along the path.
  std::vector<Weight> roots{path.roots.front().weight};
  std::vector<Rational> values{Rational(C)};
  for (std::size_t t = 0; t < path.kappas.size(); ++t) {
    Weight r = path.kappas[t].weight;
    for (std::size_t s = t; s-- > 0;) r = reflect(r, path.kappas[s].weight, alg);
    roots.push_back(r);
    values.push_back(Rational(p));
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dist(-3, 3);
  Weight x = alg.zero();
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = dist(rng);
  const std::size_t k = roots.size();
  RationalMatrix gram(k, std::vector<Rational>(k));
  std::vector<Rational> rhs(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) gram[i][j] = alg.form(roots[i], roots[j]);
    rhs[i] = values[i] * alg.form(roots[i], roots[i]) / 2 - alg.form(x, roots[i]);
  }
  std::vector<Rational> coef;
  if (!solve_linear(gram, rhs, coef)) throw Error(ErrorKind::InvalidParams, "orbit constraints are degenerate");
  for (std::size_t i = 0; i < k; ++i) x += coef[i] * roots[i];
  return x;
}

OrbitReport run_orbit(std::shared_ptr<const BracketTable> table, const std::vector<int>& target, int C, int p,
                      std::uint64_t seed) {
  const auto& alg = table->algebra();
  const OrbitPath path = orbit_path(alg, target);
  if (C < 0) throw Error(ErrorKind::InvalidParams, "C must be nonnegative");
  if (p < 1) throw Error(ErrorKind::InvalidParams, "p must be positive");
  if (C > 0 && alg.gamma().odd() && C % 2 == 0)
    throw Error(ErrorKind::ParityViolation, "C = " + std::to_string(C) + " must be odd for an odd root");

  OrbitReport rep;
  ShapovalovElement shap;
  shap.beta = path.roots.front();
  shap.C = C;
  shap.mu = orbit_start_weight(alg, path, C, p, seed);
  const PBWOrder order = path.kappas.empty() ? PBWOrder::standard(*table)
                                             : PBWOrder::standard(*table, *table->root_vector(-path.kappas[0].weight));
  shap.engine = std::make_shared<PBWAlgebra>(table, order);
  if (C == 0) {
    shap.theta = shap.engine->one();
    rep.start_singular = true;
  } else {
    VermaModule module(shap.engine, shap.mu);
    CaseParams params{alg.case_id(), C, shap.mu};
    const VermaVector u = candidate_u(module, params);
    rep.start_singular = module.is_singular(u).singular;
    shap.theta = u.body;
  }
  rep.pass = rep.start_singular;
  if (!rep.start_singular) rep.failure = "starting vector is not singular";
  for (std::size_t t = 0; t < path.kappas.size(); ++t) {
    OrbitStep step;
    try {
      shap = orbit_propagate(shap, path.kappas[t], p, step);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NotDivisible) throw;
      step.failure = e.what();
      rep.steps.push_back(step);
      rep.pass = false;
      if (rep.failure.empty()) rep.failure = step.failure;
      break;
    }
    if (!step.pass()) {
      rep.pass = false;
      if (rep.failure.empty()) rep.failure = step.failure;
    }
    rep.steps.push_back(std::move(step));
  }
  return rep;
}

}  // namespace singvec
