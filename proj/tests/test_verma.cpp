#include <doctest.h>

#include "singvec/error.hpp"
#include "support.hpp"

using namespace test;

namespace {

// [e, f] = c h_a: the scalar c read off the table
Rational ef_scale(const BracketTable& t, const Weight& a) {
  const GVector ef = t.bracket(t.root_vector(a).value(), t.root_vector(-a).value());
  const GVector h = t.coroot(a);
  return ef[0].coeff / h[0].coeff;
}

}  // namespace

TEST_CASE("highest weight vector") {
  auto t = table(Family::DI, 2, 2);
  const auto& alg = t->algebra();
  const Weight lambda = W({Q(1, 2), Q(3), Q(-1), Q(2)});
  VermaModule mod(engine(t), lambda);
  CHECK(mod.top_weight() == lambda - alg.rho());
  CHECK(mod.weight_of(mod.highest()) == lambda - alg.rho());
  CHECK(mod.is_singular(mod.highest()).singular);
  CHECK(mod.is_singular(mod.highest(), true).singular);
  // Cartan elements act by <lambda - rho, h>
  for (int k = 0; k < t->rank(); ++k) {
    auto v = mod.act(t->cartan(k), mod.highest());
    auto expected = mod.highest();
    expected.body *= t->evaluate(lambda - alg.rho(), k);
    CHECK(v == expected);
  }
  // every positive root vector kills v+
  for (int r = 0; r < t->num_roots(); ++r) CHECK(mod.act(t->positive(r), mod.highest()).is_zero());
  CHECK_THROWS_AS(mod.make(mod.engine().generator(t->positive(0))), Error);
}

TEST_CASE("weight of f_gamma^N v+") {
  auto t = table(Family::BII, 2, 1);
  const auto& alg = t->algebra();
  VermaModule mod(engine(t), W({Q(1), Q(2), Q(5, 2)}));
  const int f = t->root_vector(-alg.gamma().weight).value();
  for (int N = 1; N <= 4; ++N) {
    const auto v = mod.act_word(std::vector<int>(static_cast<std::size_t>(N), f), mod.highest());
    CHECK(mod.weight_of(v) == mod.top_weight() - Rational(N) * alg.gamma().weight);
  }
}

TEST_CASE("D-I: e_{2d_m} f_{2d_m}^{N+n} v+ vanishes when <lambda, h_{2d_m}> = N") {
  for (int n = 2; n <= 3; ++n)
    for (int N = 1; N <= 3; ++N) {
      auto t = table(Family::DI, 2, n);
      const auto& alg = t->algebra();
      const Weight lambda = default_lambda(alg, N, 4);
      REQUIRE(coroot_pairing(lambda, alg.gamma(), alg) == N);
      VermaModule mod(engine(t), lambda);
      const int f = t->root_vector(-alg.gamma().weight).value();
      const int e = t->root_vector(alg.gamma().weight).value();
      const auto v = mod.act_word(std::vector<int>(static_cast<std::size_t>(N + n), f), mod.highest());
      CHECK_FALSE(v.is_zero());
      CHECK(mod.act(e, v).is_zero());
      // one power lower is not killed
      const auto w = mod.act_word(std::vector<int>(static_cast<std::size_t>(N + n - 1), f), mod.highest());
      CHECK_FALSE(mod.act(e, w).is_zero());
    }
}

TEST_CASE("odd root string: e_d f_d^j v+ by alternating sums") {
  // e f^j v = sum_{i<j} (-1)^i f^i [e,f] f^{j-1-i} v, with [h_d, f] = -2 f
  for (auto t : {table(Family::BI, 1, 1), table(Family::BII, 2, 1), table(Family::G3)}) {
    const auto& alg = t->algebra();
    const std::size_t last = has_rank_params(alg.case_id().family)
                                 ? static_cast<std::size_t>(alg.case_id().m - 1)
                                 : 0;
    const Weight d = alg.unit(last);
    const int e = t->root_vector(d).value(), f = t->root_vector(-d).value();
    const Rational c = ef_scale(*t, d);
    const Weight lambda = default_lambda(alg, 1, 9);
    VermaModule mod(engine(t), lambda);
    const Rational H = coroot_pairing(lambda - alg.rho(), d, alg);
    for (int j = 1; j <= 9; ++j) {
      Rational expected = 0;
      for (int i = 0; i < j; ++i) expected += Rational(i % 2 == 0 ? 1 : -1) * (H - 2 * (j - 1 - i));
      expected *= c;
      auto rhs = mod.act_word(std::vector<int>(static_cast<std::size_t>(j - 1), f), mod.highest());
      rhs.body *= expected;
      CHECK(mod.act(e, mod.act_word(std::vector<int>(static_cast<std::size_t>(j), f), mod.highest())) == rhs);
    }
  }
}

TEST_CASE("classical singular vectors f_a^{<lambda, h_a>} v+") {
  for (auto t : {table(Family::BI, 2, 2), table(Family::DII, 2, 2), table(Family::F31), table(Family::G3)}) {
    const auto& alg = t->algebra();
    for (const auto& s : alg.simple_roots()) {
      if (s.odd()) continue;
      const Weight lambda = default_lambda(alg, 1, 2);
      const Rational k = coroot_pairing(lambda, s, alg);
      long kk = 0;
      if (!to_int(k, kk) || kk <= 0) continue;
      VermaModule mod(engine(t), lambda);
      const int f = t->negative(s.index);
      const auto v = mod.act_word(std::vector<int>(static_cast<std::size_t>(kk), f), mod.highest());
      CHECK(mod.is_singular(v).singular);
    }
  }
}

TEST_CASE("f_a v+ with non-integral <lambda, h_a> is not singular") {
  auto t = table(Family::BI, 2, 1);
  const auto& alg = t->algebra();
  const auto& a = alg.simple_roots()[0];
  REQUIRE_FALSE(a.odd());
  const Weight lambda = W({Q(1, 3), Q(0), Q(2)});
  REQUIRE_FALSE(is_integer(coroot_pairing(lambda, a, alg)));
  VermaModule mod(engine(t), lambda);
  const auto rep = mod.is_singular(mod.act(t->negative(a.index), mod.highest()));
  CHECK_FALSE(rep.singular);
  CHECK(rep.nonzero);
  bool certificate = false;
  for (const auto& e : rep.entries)
    if (e.terms > 0 && !e.residual.empty()) certificate = true;
  CHECK(certificate);
}

TEST_CASE("zero is not singular") {
  auto t = table(Family::G3);
  VermaModule mod(engine(t), default_lambda(t->algebra(), 1, 0));
  const auto rep = mod.is_singular(VermaVector{UEAElement{}, mod.lambda()});
  CHECK_FALSE(rep.singular);
  CHECK_FALSE(rep.nonzero);
}

TEST_CASE("acting with a product equals acting factor by factor") {
  auto t = table(Family::DII, 1, 2);
  auto e = engine(t);
  VermaModule mod(e, W({Q(2), Q(1, 2), Q(-1)}));
  const std::vector<int> w{t->positive(1), t->negative(0), t->negative(3), t->cartan(1), t->negative(2)};
  CHECK(mod.act(e->word(w), mod.highest()) == mod.act_word(w, mod.highest()));
}
