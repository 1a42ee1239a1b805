#include "singvec/campaign.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <charconv>
#include <exception>
#include <json.hpp>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>

#include "singvec/error.hpp"

namespace singvec {

using ojson = nlohmann::ordered_json;

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

long parse_long(std::string_view s, std::string_view whole) {
  s = trim(s);
  long v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    throw Error(ErrorKind::Parse, "bad grid value '" + std::string(whole) + "'");
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

}  // namespace

std::vector<long> parse_grid(std::string_view text) {
  std::vector<long> out;
  for (auto item : split(text, ',')) {
    item = trim(item);
    auto dots = item.find("..");
    if (dots == std::string_view::npos) {
      out.push_back(parse_long(item, text));
      continue;
    }
    const long lo = parse_long(item.substr(0, dots), text);
    const long hi = parse_long(item.substr(dots + 2), text);
    if (hi < lo || hi - lo > 10000) throw Error(ErrorKind::Parse, "bad range '" + std::string(item) + "'");
    for (long v = lo; v <= hi; ++v) out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

CheckSet CheckSet::parse(std::string_view text) {
  CheckSet c{false, false, false, false};
  for (auto item : split(text, ',')) {
    item = trim(item);
    if (item == "all") {
      c = CheckSet{};
    } else if (item == "nonzero") {
      c.nonzero = true;
    } else if (item == "singular") {
      c.singular = true;
    } else if (item == "lemma31") {
      c.lemma31 = true;
    } else if (item == "witness") {
      c.witness = true;
    } else {
      throw Error(ErrorKind::Parse, "unknown check '" + std::string(item) + "'");
    }
  }
  return c;
}

bool VerificationReport::passed() const {
  for (const auto& f : {nonzero, singular, lemma31_ok, witness_ok})
    if (f && !*f) return false;
  return weight_ok;
}

VerificationReport verify_point(std::shared_ptr<const BracketTable> table, const CaseParams& params,
                                std::uint64_t seed, const CheckSet& checks) {
  const auto start = std::chrono::steady_clock::now();
  const auto& alg = table->algebra();
  VerificationReport r;
  r.id = params.id;
  r.N = params.N;
  r.seed = seed;
  r.lambda = params.lambda;
  r.gamma = alg.label(alg.gamma().weight);
  r.weight_drop = Rational(params.N) * alg.gamma().weight;
  auto note = [&](const std::string& s) {
    if (r.counterexample.empty()) r.counterexample = s;
  };

  auto engine = std::make_shared<PBWAlgebra>(table, PBWOrder::standard(*table));
  VermaModule module(engine, params.lambda);
  const VermaVector u = candidate_u(module, params);
  r.u_terms = u.body.size();
  if (checks.nonzero) {
    r.nonzero = !u.is_zero();
    if (!*r.nonzero) note("u = 0");
  }
  const Weight expected = module.top_weight() - r.weight_drop;
  try {
    r.weight_ok = !u.is_zero() && module.weight_of(u) == expected;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::Inhomogeneous) throw;
    r.weight_ok = false;
  }
  if (!r.weight_ok) note("u is not homogeneous of weight " + serialize(expected) + ": " + module.render(u));

  if (checks.singular) {
    const auto rep = module.is_singular(u);
    r.singular = rep.singular;
    r.residuals = rep.entries;
    for (const auto& e : rep.entries)
      if (e.terms != 0) note("e_{" + e.root + "} u = " + e.residual);
  }

  if (checks.lemma31) {
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    const std::size_t k = candidate_formula(*table, params.N).raising.size();
    std::vector<int> perm(k);
    bool ok = true;
    for (int trial = 0; trial < 20; ++trial) {
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      const int s = sign_relation(permuted_u(module, params, perm), u);
      if (s > 0) ++r.lemma31_plus;
      if (s < 0) ++r.lemma31_minus;
      if (s == 0 && ok) {
        ok = false;
        std::string p;
        for (int x : perm) p += (p.empty() ? "" : " ") + std::to_string(x);
        note("odd factors reordered as [" + p + "] give neither u nor -u");
      }
    }
    r.lemma31_ok = ok;
  }

  if (checks.witness) {
    auto ref = std::make_shared<PBWAlgebra>(table, reference_order(*table));
    VermaModule refmod(ref, params.lambda);
    const auto chain = witness_chain(refmod, params);
    r.witnesses = chain.steps;
    bool ok = chain.pass;
    const auto fam = alg.case_id().family;
    if (fam == Family::F31 || fam == Family::G3) {
      const auto ids = leading_witness(*table, params);
      WitnessStep lead;
      lead.name = "u";
      lead.monomial = ref->render(ref->monomial(ids));
      lead.coefficient = coefficient_witness(refmod, params, ids);
      if (lead.coefficient == 0) ok = false;
      r.witnesses.insert(r.witnesses.begin(), lead);
    }
    r.witness_ok = ok;
    for (const auto& s : r.witnesses)
      if (s.coefficient == 0) note("witness " + s.name + " = " + s.monomial + " has coefficient 0");
  }
  r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

namespace {

struct Point {
  std::shared_ptr<const BracketTable> table;
  CaseParams params;
  std::uint64_t seed;
};

template <class Task>
void run_pool(std::size_t count, unsigned jobs, Task task) {
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, count));
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (std::size_t i; (i = next++) < count;) {
      try {
        task(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace

std::vector<VerificationReport> run_verify(const VerifyRequest& req) {
  std::vector<Point> points;
  std::map<CaseId, std::shared_ptr<const BracketTable>> tables;
  for (long m : req.m)
    for (long n : req.n) {
      CaseId id{req.family, static_cast<int>(m), static_cast<int>(n)};
      validate(id);
      auto alg = std::make_shared<const AlgebraData>(build_algebra_data(id));
      auto table = std::make_shared<const BracketTable>(build_structure_constants(alg));
      tables[id] = table;
      std::optional<Weight> lambda;
      if (req.lambda) lambda = parse_weight(*req.lambda, alg->dim());
      std::vector<std::optional<int>> Ns;
      if (req.N.empty()) {
        Ns.push_back(std::nullopt);
      } else {
        for (long N : req.N) Ns.push_back(static_cast<int>(N));
      }
      for (const auto& N : Ns)
        for (auto seed : req.seeds) {
          CaseParams params = make_params(*alg, N, lambda, static_cast<std::uint64_t>(seed));
          points.push_back({table, params, static_cast<std::uint64_t>(seed)});
        }
    }
  std::stable_sort(points.begin(), points.end(), [](const Point& a, const Point& b) {
    return std::tie(a.params.id, a.params.N, a.seed) < std::tie(b.params.id, b.params.N, b.seed);
  });
  std::vector<VerificationReport> out(points.size());
  run_pool(points.size(), req.jobs, [&](std::size_t i) {
    out[i] = verify_point(points[i].table, points[i].params, points[i].seed, req.checks);
  });
  return out;
}

namespace {

ojson flag(const std::optional<bool>& f) { return f ? ojson(*f) : ojson(nullptr); }

std::string yesno(const std::optional<bool>& f) {
  if (!f) return "-";
  return *f ? "yes" : "NO";
}

ojson case_fields(const CaseId& id) {
  ojson j;
  j["case"] = to_string(id);
  j["family"] = std::string(to_string(id.family));
  if (has_rank_params(id.family)) {
    j["m"] = id.m;
    j["n"] = id.n;
  }
  return j;
}

}  // namespace

std::string report_json(const VerificationReport& r, bool timing) {
  ojson j = case_fields(r.id);
  j["N"] = r.N;
  j["seed"] = r.seed;
  j["lambda"] = serialize(r.lambda);
  j["gamma"] = r.gamma;
  j["weight_drop"] = serialize(r.weight_drop);
  j["u_terms"] = r.u_terms;
  j["pass"] = r.passed();
  j["flags"] = {{"nonzero", flag(r.nonzero)},
                {"weight_ok", r.weight_ok},
                {"singular", flag(r.singular)},
                {"lemma31_ok", flag(r.lemma31_ok)},
                {"witness_ok", flag(r.witness_ok)}};
  ojson res = ojson::object();
  for (const auto& e : r.residuals) res[e.root] = e.terms;
  j["residual_terms"] = res;
  if (r.lemma31_ok) j["lemma31"] = {{"plus", r.lemma31_plus}, {"minus", r.lemma31_minus}};
  if (r.witness_ok) {
    ojson w = ojson::array();
    for (const auto& s : r.witnesses)
      w.push_back({{"name", s.name}, {"monomial", s.monomial}, {"coefficient", to_string(s.coefficient)}});
    j["witnesses"] = w;
  }
  if (!r.counterexample.empty()) j["counterexample"] = r.counterexample;
  if (timing) j["elapsed_ms"] = static_cast<long>(r.elapsed_ms + 0.5);
  return j.dump();
}

std::string report_text(const VerificationReport& r, bool timing) {
  std::ostringstream os;
  os << to_string(r.id) << " N=" << r.N << " seed=" << r.seed << (r.passed() ? " PASS" : " FAIL") << "\n";
  os << "  lambda = (" << serialize(r.lambda) << ")  gamma = " << r.gamma << "  u has " << r.u_terms << " terms\n";
  os << "  nonzero=" << yesno(r.nonzero) << " weight=" << (r.weight_ok ? "yes" : "NO")
     << " singular=" << yesno(r.singular) << " lemma31=" << yesno(r.lemma31_ok);
  if (r.lemma31_ok) os << " (" << r.lemma31_plus << "+/" << r.lemma31_minus << "-)";
  os << " witness=" << yesno(r.witness_ok) << "\n";
  if (!r.residuals.empty()) {
    os << "  residual terms:";
    for (const auto& e : r.residuals) os << " " << e.root << ":" << e.terms;
    os << "\n";
  }
  if (!r.witnesses.empty()) {
    os << "  witness coefficients:";
    for (const auto& s : r.witnesses) os << " " << s.name << "=" << to_string(s.coefficient);
    os << "\n";
  }
  if (!r.counterexample.empty()) os << "  counterexample: " << r.counterexample << "\n";
  if (timing) os << "  elapsed " << static_cast<long>(r.elapsed_ms + 0.5) << " ms\n";
  return os.str();
}

// ---------------------------------------------------------------------------

std::vector<OrbitResult> run_orbit_campaign(const OrbitRequest& req) {
  validate(req.id);
  if (!has_rank_params(req.id.family))
    throw Error(ErrorKind::InvalidParams,
                std::string(to_string(req.id.family)) + " needs no orbit propagation: every root in the orbit is gamma");
  auto alg = std::make_shared<const AlgebraData>(build_algebra_data(req.id));
  auto table = std::make_shared<const BracketTable>(build_structure_constants(alg));
  orbit_path(*alg, req.target);  // validates the target before any work
  std::vector<OrbitResult> out;
  for (long C : req.C) {
    OrbitResult r;
    r.id = req.id;
    r.C = static_cast<int>(C);
    r.p = req.p;
    r.seed = req.seed;
    r.target = req.target;
    r.report = run_orbit(table, req.target, r.C, req.p, req.seed);
    out.push_back(std::move(r));
  }
  return out;
}

std::string orbit_json(const OrbitResult& r) {
  ojson j = case_fields(r.id);
  ojson t = ojson::array();
  for (int x : r.target) t.push_back(x);
  j["target"] = t;
  j["C"] = r.C;
  j["p"] = r.p;
  j["seed"] = r.seed;
  j["pass"] = r.report.pass;
  j["start_singular"] = r.report.start_singular;
  ojson steps = ojson::array();
  for (const auto& s : r.report.steps) {
    steps.push_back({{"from", s.beta_from},
                     {"kappa", s.kappa},
                     {"to", s.beta_to},
                     {"p", s.p},
                     {"exponent", s.exponent},
                     {"mu", serialize(s.mu)},
                     {"nu", serialize(s.nu)},
                     {"round_trip", s.round_trip},
                     {"x_singular", s.x_singular},
                     {"theta_singular", s.theta_singular},
                     {"weight_ok", s.weight_ok},
                     {"x_terms", s.x_terms},
                     {"theta_terms", s.theta_terms}});
    if (!s.failure.empty()) steps.back()["failure"] = s.failure;
  }
  j["steps"] = steps;
  if (!r.report.failure.empty()) j["failure"] = r.report.failure;
  return j.dump();
}

std::string orbit_text(const OrbitResult& r) {
  std::ostringstream os;
  os << to_string(r.id) << " C=" << r.C << " p=" << r.p << " seed=" << r.seed << (r.report.pass ? " PASS" : " FAIL")
     << "\n";
  os << "  start vector singular: " << (r.report.start_singular ? "yes" : "NO") << "\n";
  for (const auto& s : r.report.steps) {
    os << "  " << s.beta_from << " -> " << s.beta_to << " via " << s.kappa << ": f^" << s.exponent << " theta / f^"
       << s.p << " (" << s.x_terms << " terms), round trip " << (s.round_trip ? "yes" : "NO") << ", singular "
       << (s.x_singular && s.theta_singular ? "yes" : "NO") << ", weight " << (s.weight_ok ? "yes" : "NO") << "\n";
    os << "    mu = (" << serialize(s.mu) << ")  nu = (" << serialize(s.nu) << ")\n";
  }
  if (!r.report.failure.empty()) os << "  failure: " << r.report.failure << "\n";
  return os.str();
}

// ---------------------------------------------------------------------------

CaseId smallest_case(Family f) {
  switch (f) {
    case Family::BI:
    case Family::BII: return {f, 1, 1};
    case Family::DI:
    case Family::DII: return {f, 1, 2};
    case Family::F31:
    case Family::G3: return {f, 0, 0};
  }
  return {f, 0, 0};
}

std::string inject_sign_fault(BracketTable& table) {
  for (int a = 0; a < table.num_roots(); ++a)
    for (int b = 0; b < table.num_roots(); ++b) {
      const int x = table.positive(a);
      const int y = table.positive(b);
      if (table.bracket(x, y).empty()) continue;
      table.flip_sign(x, y);
      return "[" + table.label(x) + ", " + table.label(y) + "]";
    }
  throw Error(ErrorKind::InvalidParams, "no bracket to corrupt");
}

UEAElement random_element(PBWAlgebra& engine, std::mt19937_64& rng, const std::vector<int>& pool, int terms,
                          int length) {
  std::uniform_int_distribution<int> nterms(1, terms);
  std::uniform_int_distribution<int> len(0, length);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::uniform_int_distribution<int> num(-3, 3);
  std::uniform_int_distribution<int> den(1, 2);
  UEAElement out;
  const int t = nterms(rng);
  for (int k = 0; k < t; ++k) {
    std::vector<int> word(static_cast<std::size_t>(len(rng)));
    for (auto& w : word) w = pool[pick(rng)];
    int c = num(rng);
    if (c == 0) c = 1;
    Rational q(c, den(rng));
    q.canonicalize();
    out.add(engine.word(word), q);
  }
  return out;
}

namespace {

// First even simple root; B-II with m = n = 1 has none, so fall back to the
// first even positive root (the identity only needs [e, f] and <kappa, h> = 2).
Weight first_even_root(const AlgebraData& alg) {
  for (const auto& s : alg.simple_roots())
    if (!s.odd()) return s.weight;
  for (const auto& r : alg.positive_roots())
    if (!r.odd()) return r.weight;
  throw Error(ErrorKind::InvalidParams, "no even root");
}

}  // namespace

std::vector<SelftestOutcome> run_selftest(const SelftestOptions& opts) {
  std::vector<SelftestOutcome> out;
  const Family all[] = {Family::BI, Family::BII, Family::DI, Family::DII, Family::F31, Family::G3};
  for (Family fam : all) {
    if (opts.family && *opts.family != fam) continue;
    const CaseId id = smallest_case(fam);
    const std::string label = to_string(id);
    auto add = [&](const std::string& check, bool pass, const std::string& detail) {
      out.push_back({label, check, pass, detail});
    };
    auto alg = std::make_shared<const AlgebraData>(build_algebra_data(id));

    // rho
    {
      bool ok = alg->rho() == alg->rho_closed_form();
      std::string detail = ok ? "half-sum equals closed form" : "half-sum " + serialize(alg->rho()) +
                                                                   " differs from closed form " +
                                                                   serialize(alg->rho_closed_form());
      for (const auto& s : alg->simple_roots()) {
        if (!s.odd() && coroot_pairing(alg->rho(), s, *alg) != 1) {
          ok = false;
          detail = "<rho, h> != 1 for " + alg->label(s.weight);
        }
        if (s.parity == Parity::OddIsotropic && alg->form(alg->rho(), s.weight) != 0) {
          ok = false;
          detail = "(rho, a) != 0 for isotropic " + alg->label(s.weight);
        }
      }
      add("rho", ok, detail);
    }

    auto table_mut = std::make_shared<BracketTable>(build_structure_constants(alg));
    std::string fault;
    if (opts.inject_sign_fault) fault = inject_sign_fault(*table_mut);
    std::shared_ptr<const BracketTable> table = table_mut;

    {
      const auto j = check_jacobi(*table);
      std::string detail = j.pass ? std::to_string(table->dim()) + "^3 triples" : j.first_violation;
      if (!fault.empty()) detail += " (injected fault at " + fault + ")";
      add("jacobi", j.pass, detail);
    }
    {
      const auto g = check_grading(*table);
      add("grading", g.pass, g.pass ? "weights and [e, f] duals consistent" : g.first_violation);
    }
    if (fam == Family::BII) {
      const auto r = match_commutation_list(*table);
      add("relations", r.pass, r.pass ? "nine-relation list matched by rescaling" : r.failure);
    }

    auto engine = std::make_shared<PBWAlgebra>(table, PBWOrder::standard(*table));
    {
      std::mt19937_64 rng(opts.seed);
      std::vector<int> pool(table->dim());
      std::iota(pool.begin(), pool.end(), 0);
      bool ok = true;
      std::string detail = std::to_string(opts.associativity_samples) + " random triples";
      for (int s = 0; s < opts.associativity_samples && ok; ++s) {
        const auto a = random_element(*engine, rng, pool, 2, 2);
        const auto b = random_element(*engine, rng, pool, 2, 2);
        const auto c = random_element(*engine, rng, pool, 2, 2);
        if (!(engine->multiply(engine->multiply(a, b), c) == engine->multiply(a, engine->multiply(b, c)))) {
          ok = false;
          detail = "(ab)c != a(bc) for a = " + engine->render(a) + ", b = " + engine->render(b) +
                   ", c = " + engine->render(c);
        }
      }
      add("associativity", ok, detail);
    }

    const CaseParams params = make_params(*alg, 1, std::nullopt, opts.seed);
    VermaModule module(engine, params.lambda);

    // osp(1|2): e f^{2k+1} v+ = 2c (<lambda - rho, h>/2 - k) f^{2k} v+, [e, f] = c h.
    if (fam == Family::BI || fam == Family::BII || fam == Family::G3) {
      const Weight d = fam == Family::G3 ? alg->unit(0) : alg->unit(static_cast<std::size_t>(id.m - 1));
      const int e = *table->root_vector(d);
      const int f = *table->root_vector(-d);
      const GVector h = table->coroot(d);
      const GVector ef = table->bracket(e, f);
      const Rational c = ef.empty() ? Rational(0) : ef[0].coeff / h[0].coeff;
      const Rational hval = table->evaluate(module.top_weight(), h);
      bool ok = c != 0;
      std::string detail = "k <= 4";
      for (int k = 0; k <= 4 && ok; ++k) {
        const auto lhs = module.act(e, module.act_word(std::vector<int>(2 * k + 1, f), module.highest()));
        auto rhs = module.act_word(std::vector<int>(2 * k, f), module.highest());
        rhs.body *= 2 * c * (hval / 2 - k);
        if (!(lhs == rhs)) {
          ok = false;
          detail = "k = " + std::to_string(k) + ": " + module.render(lhs) + " vs " + module.render(rhs);
        }
      }
      add("osp12", ok, detail);
    }
    // sl2: e f^l v+ = c l (<lambda - rho, h> - l + 1) f^{l-1} v+.
    {
      const Weight k = first_even_root(*alg);
      const std::string name = alg->label(k);
      const int e = *table->root_vector(k);
      const int f = *table->root_vector(-k);
      const GVector h = table->coroot(k);
      const GVector ef = table->bracket(e, f);
      const Rational c = ef.empty() ? Rational(0) : ef[0].coeff / h[0].coeff;
      const Rational hval = table->evaluate(module.top_weight(), h);
      bool ok = c != 0;
      std::string detail = "root " + name + ", l <= 5";
      for (int l = 1; l <= 5 && ok; ++l) {
        const auto lhs = module.act(e, module.act_word(std::vector<int>(static_cast<std::size_t>(l), f), module.highest()));
        auto rhs = module.act_word(std::vector<int>(static_cast<std::size_t>(l - 1), f), module.highest());
        rhs.body *= c * l * (hval - l + 1);
        if (!(lhs == rhs)) {
          ok = false;
          detail = "l = " + std::to_string(l) + ": " + module.render(lhs) + " vs " + module.render(rhs);
        }
      }
      add("sl2", ok, detail);
    }
    {
      const auto u = candidate_u(module, params);
      const auto rep = module.is_singular(u);
      std::string detail = "N = 1, " + std::to_string(u.body.size()) + " terms";
      for (const auto& e : rep.entries)
        if (e.terms != 0) {
          detail = "e_{" + e.root + "} u = " + e.residual;
          break;
        }
      if (!rep.nonzero) detail = "u = 0";
      add("singular", rep.singular, detail);
    }
  }
  return out;
}

}  // namespace singvec
