#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "singvec/campaign.hpp"
#include "singvec/error.hpp"
#include "support.hpp"

using namespace test;

TEST_CASE("grid syntax") {
  CHECK(parse_grid("3") == std::vector<long>{3});
  CHECK(parse_grid("1..3") == std::vector<long>{1, 2, 3});
  CHECK(parse_grid("5,1,3") == std::vector<long>{1, 3, 5});
  CHECK(parse_grid("1..2,7, 2") == std::vector<long>{1, 2, 7});
  CHECK_THROWS_AS(parse_grid("3..1"), Error);
  CHECK_THROWS_AS(parse_grid("1,,2"), Error);
  CHECK_THROWS_AS(parse_grid("x"), Error);
}

TEST_CASE("check sets") {
  const auto all = CheckSet::parse("all");
  CHECK((all.nonzero && all.singular && all.lemma31 && all.witness));
  const auto some = CheckSet::parse("singular,witness");
  CHECK_FALSE(some.nonzero);
  CHECK(some.singular);
  CHECK_FALSE(some.lemma31);
  CHECK(some.witness);
  CHECK_THROWS_AS(CheckSet::parse("everything"), Error);
}

TEST_CASE("a verification point fills every flag") {
  auto t = table(Family::DI, 2, 2);
  const auto params = make_params(t->algebra(), 1, std::nullopt, 7);
  const auto r = verify_point(t, params, 7, CheckSet{});
  CHECK(r.passed());
  CHECK(r.nonzero == true);
  CHECK(r.weight_ok);
  CHECK(r.singular == true);
  CHECK(r.lemma31_ok == true);
  CHECK(r.lemma31_plus + r.lemma31_minus == 20);
  CHECK(r.witness_ok == true);
  CHECK(r.residuals.size() == t->algebra().rank());
  CHECK(r.counterexample.empty());
  CHECK(r.gamma == "2d2");
}

TEST_CASE("unrequested checks stay empty") {
  auto t = table(Family::G3);
  const auto params = make_params(t->algebra(), 1, std::nullopt, 0);
  const auto r = verify_point(t, params, 0, CheckSet::parse("nonzero"));
  CHECK(r.nonzero == true);
  CHECK_FALSE(r.singular.has_value());
  CHECK_FALSE(r.lemma31_ok.has_value());
  CHECK(r.passed());
  const auto j = nlohmann::json::parse(report_json(r, false));
  CHECK(j["flags"]["singular"].is_null());
  CHECK_FALSE(j.contains("elapsed_ms"));
  CHECK(nlohmann::json::parse(report_json(r, true)).contains("elapsed_ms"));
}

TEST_CASE("reports are canonical and byte-deterministic") {
  VerifyRequest req;
  req.family = Family::BII;
  req.m = {2, 1};
  req.n = {1};
  req.N = {3, 1};
  req.seeds = {4, 2};
  std::string serial, parallel;
  req.jobs = 1;
  for (const auto& r : run_verify(req)) serial += report_json(r, false) + "\n";
  req.jobs = 4;
  const auto reports = run_verify(req);
  for (const auto& r : reports) parallel += report_json(r, false) + "\n";
  CHECK(serial == parallel);
  REQUIRE(reports.size() == 8);
  CHECK(reports.front().id.m == 1);
  CHECK(reports.front().N == 1);
  CHECK(reports.front().seed == 2);
  CHECK(reports.back().id.m == 2);
  CHECK(reports.back().N == 3);
  CHECK(reports.back().seed == 4);
  // newline-delimited, one object per point
  std::istringstream lines(serial);
  int count = 0;
  for (std::string line; std::getline(lines, line); ++count) CHECK(nlohmann::json::parse(line).is_object());
  CHECK(count == 8);
}

TEST_CASE("the grid is validated before any work") {
  VerifyRequest req;
  req.family = Family::BI;
  req.m = {1};
  req.n = {1};
  req.N = {1, 2};
  try {
    run_verify(req);
    FAIL("even N accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ParityViolation);
  }
}

TEST_CASE("text report") {
  auto t = table(Family::F31);
  const auto r = verify_point(t, make_params(t->algebra(), 1, std::nullopt, 1), 1, CheckSet{});
  const auto text = report_text(r, false);
  CHECK(text.find("F31 N=1 seed=1 PASS") == 0);
  CHECK(text.find("elapsed") == std::string::npos);
}

TEST_CASE("orbit campaign") {
  OrbitRequest req;
  req.id = CaseId{Family::BII, 1, 3};
  req.target = {1};
  req.C = {1, 3};
  const auto out = run_orbit_campaign(req);
  REQUIRE(out.size() == 2);
  for (const auto& r : out) {
    CHECK(r.report.pass);
    const auto j = nlohmann::json::parse(orbit_json(r));
    CHECK(j["steps"].size() == 2);
    CHECK(j["steps"][1]["to"] == "e1");
  }
  req.id = CaseId{Family::F31, 0, 0};
  CHECK_THROWS_AS(run_orbit_campaign(req), Error);
}

TEST_CASE("selftest passes and catches an injected sign") {
  SelftestOptions opts;
  for (const auto& s : run_selftest(opts)) {
    CAPTURE(s.case_label);
    CAPTURE(s.check);
    CAPTURE(s.detail);
    CHECK(s.pass);
  }
  opts.family = Family::G3;
  opts.inject_sign_fault = true;
  bool jacobi_failed = false;
  for (const auto& s : run_selftest(opts)) {
    CHECK(s.case_label == "G3");
    if (s.check == "jacobi") jacobi_failed = !s.pass;
  }
  CHECK(jacobi_failed);
}
