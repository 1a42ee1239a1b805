#include <doctest.h>

#include <numeric>
#include <random>

#include "singvec/campaign.hpp"
#include "singvec/error.hpp"
#include "support.hpp"

using namespace test;

namespace {

std::vector<int> all_ids(const BracketTable& t) {
  std::vector<int> ids(t.dim());
  std::iota(ids.begin(), ids.end(), 0);
  return ids;
}

std::vector<int> negative_ids(const BracketTable& t) {
  std::vector<int> ids;
  for (int r = 0; r < t.num_roots(); ++r) ids.push_back(t.negative(r));
  return ids;
}

// (ad x)^k (y) straight from the bracket table
GVector ad_power(const BracketTable& t, int x, GVector y, int k) {
  for (int i = 0; i < k; ++i) y = t.bracket(x, y);
  return y;
}

long binom(int n, int k) {
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST_CASE("normal forms are idempotent") {
  auto t = table(Family::G3);
  auto e = engine(t);
  std::mt19937_64 rng(11);
  const auto pool = all_ids(*t);
  for (int s = 0; s < 50; ++s) {
    const auto x = random_element(*e, rng, pool, 3, 4);
    for (const auto& [m, c] : x.terms()) {
      UEAElement single;
      single.add(m, c);
      CHECK(c * e->word(e->basis_ids(m)) == single);
    }
  }
}

TEST_CASE("an odd isotropic generator squares to zero") {
  auto t = table(Family::DI, 2, 2);
  auto e = engine(t);
  int count = 0;
  for (const auto& r : t->algebra().positive_roots()) {
    if (r.parity != Parity::OddIsotropic) continue;
    const int f = t->negative(r.index);
    CHECK(e->word({f, f}).is_zero());
    CHECK(e->word({t->positive(r.index), t->positive(r.index)}).is_zero());
    ++count;
  }
  CHECK(count == 8);
}

TEST_CASE("the square of f_d is a nonzero multiple of f_2d") {
  for (auto t : {table(Family::BI, 1, 1), table(Family::BI, 2, 2), table(Family::BII, 1, 2), table(Family::G3)}) {
    auto e = engine(t);
    const auto& alg = t->algebra();
    const Weight d = alg.gamma().parity == Parity::OddNonisotropic ? alg.gamma().weight : alg.unit(0);
    const int f = t->root_vector(-d).value();
    const int f2 = t->root_vector(Q(-2) * d).value();
    const GVector ff = t->bracket(f, f);
    REQUIRE(ff.size() == 1);
    REQUIRE(ff[0].index == f2);
    const Rational c = ff[0].coeff / 2;
    CHECK(c != 0);
    CHECK(e->word({f, f}) == c * e->generator(f2));
  }
}

TEST_CASE("one straightening step for an even simple root") {
  auto t = table(Family::BI, 2, 1);
  auto e = engine(t);
  const auto& s = t->algebra().simple_roots()[0];
  REQUIRE_FALSE(s.odd());
  const int x = t->positive(s.index), y = t->negative(s.index);
  CHECK(e->word({x, y}) == e->word({y, x}) + e->from_vector(t->bracket(x, y)));
  // negatives precede positives, so y x is already normal
  CHECK(e->word({y, x}).size() == 1);
}

TEST_CASE("associativity on random triples") {
  for (auto t : {table(Family::BII, 1, 1), table(Family::DII, 1, 2), table(Family::F31)}) {
    auto e = engine(t);
    std::mt19937_64 rng(5);
    const auto pool = all_ids(*t);
    for (int s = 0; s < 30; ++s) {
      const auto a = random_element(*e, rng, pool, 2, 3);
      const auto b = random_element(*e, rng, pool, 2, 3);
      const auto c = random_element(*e, rng, pool, 2, 3);
      CHECK(e->multiply(e->multiply(a, b), c) == e->multiply(a, e->multiply(b, c)));
    }
  }
}

TEST_CASE("weights add under multiplication") {
  auto t = table(Family::DI, 1, 2);
  auto e = engine(t);
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> pick(0, static_cast<int>(t->dim()) - 1);
  for (int s = 0; s < 100; ++s) {
    std::vector<int> w1{pick(rng), pick(rng)}, w2{pick(rng), pick(rng), pick(rng)};
    const auto a = e->word(w1), b = e->word(w2);
    const auto ab = e->multiply(a, b);
    if (a.is_zero() || b.is_zero() || ab.is_zero()) continue;
    Weight expected = t->algebra().zero();
    for (int id : w1) expected += t->weight(id);
    for (int id : w2) expected += t->weight(id);
    CHECK(e->weight(ab) == expected);
  }
  CHECK_THROWS_AS(e->weight(e->generator(0) + e->generator(1)), Error);
}

TEST_CASE("right division inverts right multiplication by g^p") {
  auto t = table(Family::BI, 2, 1);
  const auto& alg = t->algebra();
  const int g = t->root_vector(-alg.gamma().weight).value();  // f_{d2}, odd; use an even one
  const int k = t->root_vector(-(alg.unit(0) - alg.unit(1))).value();
  auto e = std::make_shared<PBWAlgebra>(t, PBWOrder::standard(*t, k));
  REQUIRE(e->order().rightmost_negative() == k);
  std::mt19937_64 rng(21);
  const auto pool = negative_ids(*t);

  SUBCASE("p = 0 leaves x alone") {
    const auto x = random_element(*e, rng, pool, 4, 3);
    CHECK(e->right_divide(x, k, 0) == x);
  }
  SUBCASE("g^p / g^p = 1") {
    for (int p = 1; p <= 5; ++p) CHECK(e->right_divide(e->power(k, p), k, p) == e->one());
  }
  SUBCASE("random round trips") {
    for (int s = 0; s < 100; ++s) {
      const auto theta = random_element(*e, rng, pool, 5, 3);
      const int p = 1 + s % 4;
      const auto x = e->multiply(theta, e->power(k, p));
      CHECK(e->right_divide(x, k, p) == theta);
    }
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(e->right_divide(e->generator(g), k, 1), Error);
    auto other = engine(t);
    if (other->order().rightmost_negative() != k) CHECK_THROWS_AS(other->right_divide(e->power(k, 2), k, 1), Error);
    CHECK_THROWS_AS(e->right_divide(e->generator(t->positive(0)), k, 0), Error);
  }
}

TEST_CASE("binomial expansion of x^l y for even x") {
  auto t = table(Family::BII, 1, 2);
  auto e = engine(t);
  const auto& alg = t->algebra();
  for (const auto& r : alg.positive_roots()) {
    if (r.odd()) continue;
    const int x = t->negative(r.index);
    for (int y = 0; y < static_cast<int>(t->dim()); y += 3) {
      for (int l = 1; l <= 6; ++l) {
        std::vector<int> w(static_cast<std::size_t>(l), x);
        w.push_back(y);
        UEAElement rhs;
        for (int k = 0; k <= l; ++k) {
          const GVector ad = ad_power(*t, x, GVector{{y, 1}}, k);
          if (ad.empty()) continue;
          rhs.add(e->multiply(e->from_vector(ad), e->power(x, l - k)), Rational(binom(l, k)));
        }
        CHECK(e->word(w) == rhs);
      }
    }
  }
}

TEST_CASE("import re-expresses an element in another order") {
  auto t = table(Family::F31);
  auto a = engine(t);
  auto b = std::make_shared<PBWAlgebra>(t, reference_order(*t));
  REQUIRE_FALSE(a->order() == b->order());
  std::mt19937_64 rng(8);
  const auto pool = negative_ids(*t);
  for (int s = 0; s < 20; ++s) {
    std::vector<int> w;
    for (int i = 0; i < 4; ++i) w.push_back(pool[rng() % pool.size()]);
    CHECK(b->import(a->word(w), *a) == b->word(w));
  }
}

TEST_CASE("monomials and rendering") {
  auto t = table(Family::G3);
  auto e = engine(t);
  const auto& alg = t->algebra();
  const int fd = t->root_vector(-alg.parse_label("d")).value();
  const int fe = t->root_vector(-alg.parse_label("e1")).value();
  CHECK_THROWS_AS(e->monomial({fd, fd}), Error);
  CHECK(e->render(e->monomial({fe, fe})) == "f_{e1}^{2}");
  CHECK(e->odd(e->monomial({fd})));
  CHECK_FALSE(e->odd(e->monomial({fd, fe, fe, t->root_vector(-alg.parse_label("d+e3")).value()})));
  CHECK(e->render(e->one()) == "1");
}
