#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <string>

#include "singvec/campaign.hpp"
#include "singvec/error.hpp"

using namespace singvec;

namespace {

struct Common {
  std::string family;
  std::string m, n, N, M, lambda, seed = "0", check = "all";
  bool json = false;
  bool timing = false;
  unsigned jobs = 0;
};

int usage(const std::string& msg) {
  std::cerr << "error: " << msg << "\n";
  return 2;
}

// Exit code for library errors: bad input is a usage error, anything else a failure.
int error_exit(const Error& e) {
  std::cerr << "error: " << e.what() << "\n";
  switch (e.kind()) {
    case ErrorKind::InvalidParams:
    case ErrorKind::ParityViolation:
    case ErrorKind::Parse:
    case ErrorKind::IsotropicCoroot:
    case ErrorKind::WrongOrder: return 2;
    default: return 1;
  }
}

std::vector<long> rank_grid(const std::string& text, Family f, const char* name) {
  if (!has_rank_params(f)) {
    if (!text.empty())
      throw Error(ErrorKind::InvalidParams, std::string(to_string(f)) + " takes no --" + name);
    return {0};
  }
  if (text.empty()) throw Error(ErrorKind::InvalidParams, std::string(to_string(f)) + " needs --" + name);
  return parse_grid(text);
}

int cmd_verify(const Common& o) {
  VerifyRequest req;
  req.family = parse_family(o.family);
  req.m = rank_grid(o.m, req.family, "m");
  req.n = rank_grid(o.n, req.family, "n");
  if (!o.N.empty() && !o.M.empty()) return usage("--N and --M are mutually exclusive");
  if (!o.N.empty()) req.N = parse_grid(o.N);
  if (!o.M.empty())
    for (long M : parse_grid(o.M)) req.N.push_back(2 * M + 1);
  if (!o.lambda.empty()) req.lambda = o.lambda;
  if (req.N.empty() && !req.lambda) return usage("one of --N, --M or --lambda is required");
  req.seeds.clear();
  for (long s : parse_grid(o.seed)) {
    if (s < 0) return usage("seeds are nonnegative");
    req.seeds.push_back(s);
  }
  req.checks = CheckSet::parse(o.check);
  req.jobs = o.jobs;
  bool all = true;
  for (const auto& r : run_verify(req)) {
    std::cout << (o.json ? report_json(r, o.timing) + "\n" : report_text(r, o.timing));
    all = all && r.passed();
  }
  return all ? 0 : 1;
}

int cmd_orbit(const Common& o, const std::string& target, const std::string& C, int p) {
  OrbitRequest req;
  const Family f = parse_family(o.family);
  if (!has_rank_params(f))
    throw Error(ErrorKind::InvalidParams,
                std::string(to_string(f)) + " has no orbit to propagate along: every root there is already covered");
  const auto m = rank_grid(o.m, f, "m");
  const auto n = rank_grid(o.n, f, "n");
  if (m.size() != 1 || n.size() != 1) return usage("orbit takes a single --m and --n");
  req.id = CaseId{f, static_cast<int>(m[0]), static_cast<int>(n[0])};
  if (target.empty()) return usage("orbit needs --target");
  for (long t : parse_grid(target)) req.target.push_back(static_cast<int>(t));
  req.C = parse_grid(C);
  req.p = p;
  const auto seeds = parse_grid(o.seed);
  if (seeds.size() != 1 || seeds[0] < 0) return usage("orbit takes a single nonnegative --seed");
  req.seed = static_cast<std::uint64_t>(seeds[0]);
  bool all = true;
  for (const auto& r : run_orbit_campaign(req)) {
    std::cout << (o.json ? orbit_json(r) + "\n" : orbit_text(r));
    all = all && r.report.pass;
  }
  return all ? 0 : 1;
}

int cmd_selftest(const Common& o, bool fault) {
  SelftestOptions opts;
  if (!o.family.empty()) opts.family = parse_family(o.family);
  const auto seeds = parse_grid(o.seed);
  if (seeds.size() != 1 || seeds[0] < 0) return usage("selftest takes a single nonnegative --seed");
  opts.seed = static_cast<std::uint64_t>(seeds[0]);
  opts.inject_sign_fault = fault;
  bool all = true;
  for (const auto& s : run_selftest(opts)) {
    if (o.json) {
      nlohmann::ordered_json j{{"case", s.case_label}, {"check", s.check}, {"pass", s.pass}, {"detail", s.detail}};
      std::cout << j.dump() << "\n";
    } else {
      std::cout << (s.pass ? "ok   " : "FAIL ") << s.case_label << " " << s.check << ": " << s.detail << "\n";
    }
    if (!s.pass && all) std::cerr << "first failure: " << s.case_label << " check " << s.check << "\n";
    all = all && s.pass;
  }
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"singvec: exact singular vectors in Verma modules over basic Lie superalgebras"};
  app.require_subcommand(1);
  Common o;
  std::string target, C = "1";
  int p = 1;
  bool fault = false;

  auto add_common = [&](CLI::App* sub, bool grid) {
    sub->add_option("--case", o.family, "B-I, B-II, D-I, D-II, F31 or G3");
    sub->add_option("--seed", o.seed, grid ? "seed or seed grid" : "seed");
    sub->add_flag("--json", o.json, "newline-delimited JSON");
    if (!grid) return;
    sub->add_option("--m", o.m, "m grid, e.g. 1..3");
    sub->add_option("--n", o.n, "n grid");
  };
  auto* verify = app.add_subcommand("verify", "build u and check it");
  add_common(verify, true);
  verify->get_option("--case")->required();
  verify->add_option("--N", o.N, "N grid, e.g. 1,3,5");
  verify->add_option("--M", o.M, "M grid, N = 2M+1");
  verify->add_option("--lambda", o.lambda, "comma-separated rationals");
  verify->add_option("--check", o.check, "nonzero,singular,lemma31,witness or all");
  verify->add_option("--jobs", o.jobs, "worker threads (0: all cores)");
  verify->add_flag("--timing", o.timing, "report elapsed milliseconds");

  auto* orbit = app.add_subcommand("orbit", "propagate along the W' orbit of gamma");
  add_common(orbit, true);
  orbit->get_option("--case")->required();
  orbit->add_option("--target", target, "index i, or i,j for D-II");
  orbit->add_option("--C", C, "C grid");
  orbit->add_option("--p", p, "power of f_kappa")->check(CLI::PositiveNumber);

  auto* selftest = app.add_subcommand("selftest", "invariant suite at the smallest parameters");
  add_common(selftest, false);
  selftest->add_flag("--inject-sign-fault", fault, "corrupt one bracket before checking");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (verify->parsed()) return cmd_verify(o);
    if (orbit->parsed()) return cmd_orbit(o, target, C, p);
    return cmd_selftest(o, fault);
  } catch (const Error& e) {
    return error_exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
