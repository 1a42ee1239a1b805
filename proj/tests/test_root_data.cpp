#include <doctest.h>

#include <algorithm>
#include <set>

#include "singvec/error.hpp"
#include "support.hpp"

using namespace test;

namespace {

std::set<Weight> weights(const std::vector<RootDatum>& roots) {
  std::set<Weight> out;
  for (const auto& r : roots) out.insert(r.weight);
  return out;
}

const Family kFamilies[] = {Family::BI, Family::BII, Family::DI, Family::DII, Family::F31, Family::G3};

std::vector<CaseId> sample_cases() {
  std::vector<CaseId> out;
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 3; ++n) {
      out.push_back({Family::BI, m, n});
      out.push_back({Family::BII, m, n});
      if (n >= 2) {
        out.push_back({Family::DI, m, n});
        out.push_back({Family::DII, m, n});
      }
    }
  out.push_back({Family::F31, 0, 0});
  out.push_back({Family::G3, 0, 0});
  return out;
}

}  // namespace

TEST_CASE("rationals and weights round-trip through text") {
  CHECK(to_string(parse_rational(" -6/4 ")) == "-3/2");
  CHECK(to_string(parse_rational("5")) == "5");
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("abc"), Error);
  const Weight w = W({Q(1, 2), Q(-3), Q(0)});
  CHECK(serialize(w) == "1/2,-3,0");
  CHECK(parse_weight(serialize(w), 3) == w);
  CHECK_THROWS_AS(parse_weight("1,2", 3), Error);
  long v = 0;
  CHECK(to_int(Q(-7), v));
  CHECK(v == -7);
  CHECK_FALSE(to_int(Q(1, 3), v));
}

TEST_CASE("exact linear solve") {
  RationalMatrix a{{Q(2), Q(1)}, {Q(1), Q(3)}};
  std::vector<Rational> x;
  REQUIRE(solve_linear(a, {Q(3), Q(5)}, x));
  CHECK(x[0] == Q(4, 5));
  CHECK(x[1] == Q(7, 5));
  RationalMatrix s{{Q(1), Q(2)}, {Q(2), Q(4)}};
  CHECK_FALSE(solve_linear(s, {Q(1), Q(1)}, x));
}

TEST_CASE("case ids parse and validate") {
  const CaseId c = parse_case_id("B-I:m=2,n=1");
  CHECK(c == CaseId{Family::BI, 2, 1});
  CHECK(to_string(c) == "B-I:m=2,n=1");
  CHECK(parse_case_id("G3") == CaseId{Family::G3, 0, 0});
  CHECK_THROWS_AS(parse_case_id("C-III"), Error);
  CHECK_THROWS_AS(validate(CaseId{Family::DI, 1, 1}), Error);
  CHECK_THROWS_AS(validate(CaseId{Family::BI, 0, 1}), Error);
  CHECK_NOTHROW(validate(CaseId{Family::BII, 1, 1}));
}

TEST_CASE("B-I with m=2, n=1: root lists and rho") {
  // basis d1, d2, e1
  auto alg = algebra(Family::BI, 2, 1);
  const std::set<Weight> even{W({1, 1, 0}), W({1, -1, 0}), W({2, 0, 0}), W({0, 2, 0}), W({0, 0, 1})};
  const std::set<Weight> odd{W({1, 0, 0}), W({0, 1, 0}), W({1, 0, 1}), W({1, 0, -1}), W({0, 1, 1}), W({0, 1, -1})};
  CHECK(alg->pos_even().size() == 5);
  CHECK(alg->pos_odd().size() == 6);
  CHECK(weights(alg->pos_even()) == even);
  CHECK(weights(alg->pos_odd()) == odd);
  CHECK(alg->rho() == W({Q(1, 2), Q(-1, 2), Q(1, 2)}));
}

TEST_CASE("exceptional rho values") {
  CHECK(algebra(Family::F31)->rho() == W({Q(-3, 2), Q(5, 2), Q(3, 2), Q(1, 2)}));
  CHECK(algebra(Family::G3)->rho() == W({Q(-5, 2), Q(2), Q(3)}));
}

TEST_CASE("half-sum rho agrees with the closed form everywhere") {
  for (const auto& c : sample_cases()) {
    auto alg = std::make_shared<const AlgebraData>(build_algebra_data(c));
    CAPTURE(to_string(c));
    CHECK(alg->rho() == alg->rho_closed_form());
  }
}

TEST_CASE("form normalisation") {
  auto osp = algebra(Family::DI, 2, 2);
  CHECK(osp->form(osp->unit(0), osp->unit(0)) == 1);
  CHECK(osp->form(osp->unit(2), osp->unit(2)) == -1);
  CHECK(osp->form(osp->unit(0), osp->unit(2)) == 0);
  auto g3 = algebra(Family::G3);
  CHECK(g3->form(g3->unit(0), g3->unit(0)) == -2);
  // eps3 = -eps1 - eps2 and (eps_i, eps_j) = 3 delta_ij - 1 up to a common factor
  const Weight e1 = g3->unit(1), e2 = g3->unit(2), e3 = -(e1 + e2);
  CHECK(g3->form(e3, e3) == g3->form(e1, e1));
  CHECK(g3->form(e1, e2) * 2 == -g3->form(e1, e1));
}

TEST_CASE("rho pairs to 1 with even simple coroots and to 0 with the isotropic root") {
  for (const auto& c : sample_cases()) {
    auto alg = std::make_shared<const AlgebraData>(build_algebra_data(c));
    CAPTURE(to_string(c));
    int isotropic = 0;
    for (const auto& s : alg->simple_roots()) {
      if (!s.odd()) CHECK(coroot_pairing(alg->rho(), s, *alg) == 1);
      if (s.parity == Parity::OddIsotropic) {
        ++isotropic;
        CHECK(alg->form(alg->rho(), s.weight) == 0);
      }
    }
    CHECK(isotropic == 1);
  }
}

TEST_CASE("gamma is a coroot of itself with pairing 2") {
  for (const auto& c : sample_cases()) {
    auto alg = std::make_shared<const AlgebraData>(build_algebra_data(c));
    CHECK(coroot_pairing(alg->gamma().weight, alg->gamma(), *alg) == 2);
  }
}

TEST_CASE("B-I: rho against h_{d1-d2}") {
  for (int m = 2; m <= 4; ++m) {
    auto alg = algebra(Family::BI, m, 2);
    Weight a = alg->unit(0) - alg->unit(1);
    CHECK(coroot_pairing(alg->rho(), a, *alg) == 1);
  }
}

TEST_CASE("D-I: rho against h_{2 d_m} is 1 - n") {
  for (int m = 1; m <= 3; ++m)
    for (int n = 2; n <= 4; ++n) {
      auto alg = algebra(Family::DI, m, n);
      Weight g = Q(2) * alg->unit(static_cast<std::size_t>(m - 1));
      CHECK(coroot_pairing(alg->rho(), g, *alg) == 1 - n);
    }
}

TEST_CASE("isotropic coroots are rejected") {
  auto alg = algebra(Family::DI, 2, 2);
  const Weight iso = alg->unit(1) - alg->unit(2);
  CHECK(alg->form(iso, iso) == 0);
  CHECK_THROWS_AS(coroot_pairing(alg->rho(), iso, *alg), Error);
}

TEST_CASE("reflections") {
  for (Family f : kFamilies) {
    auto alg = has_rank_params(f) ? algebra(f, 2, 2) : algebra(f);
    const auto& g = alg->gamma();
    CHECK(reflect(g.weight, g, *alg) == -g.weight);
    // a weight orthogonal to gamma is fixed
    for (const auto& r : alg->positive_roots())
      if (alg->form(r.weight, g.weight) == 0) CHECK(reflect(r.weight, g, *alg) == r.weight);
  }
  auto d2 = algebra(Family::DII, 1, 2);  // d1, e1, e2
  CHECK(reflect(d2->unit(1), d2->unit(1) + d2->unit(2), *d2) == -d2->unit(2));
}

TEST_CASE("orbits under the even Weyl group of simple reflections") {
  auto di = algebra(Family::DI, 3, 2);
  std::set<Weight> twice_delta;
  for (std::size_t p = 0; p < 3; ++p) twice_delta.insert(Q(2) * di->unit(p));
  CHECK(weights(wprime_orbit(di->gamma(), *di)) == twice_delta);

  auto bii = algebra(Family::BII, 2, 3);  // d1, d2, e1, e2, e3
  std::set<Weight> eps;
  for (std::size_t q = 2; q < 5; ++q) eps.insert(bii->unit(q));
  CHECK(weights(wprime_orbit(bii->gamma(), *bii)) == eps);

  // delta_i + delta_j: closure under permutations of the delta coordinates
  std::set<Weight> pairs;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j) pairs.insert(di->unit(i) + di->unit(j));
  auto start = di->find_root(di->unit(0) + di->unit(1));
  REQUIRE(start);
  CHECK(weights(wprime_orbit(*start, *di)) == pairs);
}

TEST_CASE("labels round-trip") {
  for (Family f : kFamilies) {
    auto alg = has_rank_params(f) ? algebra(f, 2, 3) : algebra(f);
    for (const auto& r : alg->positive_roots()) {
      CHECK(alg->parse_label(alg->label(r.weight)) == r.weight);
      CHECK(alg->parse_root(alg->label(-r.weight)).weight == -r.weight);
      CHECK(alg->height(r.weight) > 0);
    }
  }
  CHECK_THROWS_AS(algebra(Family::BI, 1, 1)->parse_root("d1+d1+d1"), Error);
}

TEST_CASE("root counts") {
  // osp(2n+1|2m): even m^2 + n^2 positive roots, odd m(2n+1); osp(2n|2m): m^2 + n(n-1), 2mn
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 3; ++n) {
      for (Family f : {Family::BI, Family::BII}) {
        auto alg = algebra(f, m, n);
        CHECK(alg->pos_even().size() == static_cast<std::size_t>(m * m + n * n));
        CHECK(alg->pos_odd().size() == static_cast<std::size_t>(m * (2 * n + 1)));
      }
      if (n < 2) continue;
      for (Family f : {Family::DI, Family::DII}) {
        auto alg = algebra(f, m, n);
        CHECK(alg->pos_even().size() == static_cast<std::size_t>(m * m + n * (n - 1)));
        CHECK(alg->pos_odd().size() == static_cast<std::size_t>(2 * m * n));
      }
    }
  // F(3|1): sl2 + so(7) even, 8 odd; G(3): sl2 + G2 even, 7 odd
  CHECK(algebra(Family::F31)->pos_even().size() == 1 + 9);
  CHECK(algebra(Family::F31)->pos_odd().size() == 8);
  CHECK(algebra(Family::G3)->pos_even().size() == 1 + 6);
  CHECK(algebra(Family::G3)->pos_odd().size() == 7);
}
