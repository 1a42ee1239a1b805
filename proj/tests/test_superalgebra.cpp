#include <doctest.h>

#include "singvec/error.hpp"
#include "support.hpp"

using namespace test;

namespace {

// osp(M|2k): so(M) + sp(2k) + odd part M * 2k
std::size_t osp_dim(int M, int k) {
  return static_cast<std::size_t>(M * (M - 1) / 2 + k * (2 * k + 1) + 2 * k * M);
}

bool proportional(const GVector& a, const GVector& b) {
  if (a.size() != b.size() || a.empty()) return false;
  const Rational r = a[0].coeff / b[0].coeff;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].index != b[i].index || a[i].coeff != r * b[i].coeff) return false;
  return true;
}

}  // namespace

TEST_CASE("dimensions") {
  CHECK(table(Family::G3)->dim() == 31);
  CHECK(table(Family::F31)->dim() == 40);
  for (int m = 1; m <= 2; ++m)
    for (int n = 1; n <= 3; ++n) {
      CHECK(table(Family::BI, m, n)->dim() == osp_dim(2 * n + 1, m));
      CHECK(table(Family::BII, m, n)->dim() == osp_dim(2 * n + 1, m));
      if (n >= 2) {
        CHECK(table(Family::DI, m, n)->dim() == osp_dim(2 * n, m));
        CHECK(table(Family::DII, m, n)->dim() == osp_dim(2 * n, m));
      }
    }
}

TEST_CASE("super-Jacobi and antisymmetry hold exhaustively") {
  for (auto t : {table(Family::BI, 1, 1), table(Family::BII, 2, 1), table(Family::DI, 2, 2),
                 table(Family::DII, 1, 3), table(Family::F31), table(Family::G3)}) {
    const auto r = check_jacobi(*t);
    CAPTURE(to_string(t->algebra().case_id()));
    CHECK(r.pass);
    CHECK(r.violations == 0);
    CHECK(r.triples_checked == t->dim() * t->dim() * t->dim());
  }
}

TEST_CASE("a flipped sign is caught with the violating triple") {
  auto base = table(Family::BI, 1, 1);
  BracketTable t = *base;
  const int a = t.root_vector(t.algebra().parse_label("d1")).value();
  const int b = t.root_vector(t.algebra().parse_label("e1")).value();
  REQUIRE_FALSE(t.bracket(a, b).empty());
  t.flip_sign(a, b);
  const auto r = check_jacobi(t);
  CHECK_FALSE(r.pass);
  CHECK(r.violations > 0);
  CHECK_FALSE(r.first_violation.empty());
  CHECK(r.witness.size() >= 2);
}

TEST_CASE("brackets respect the root grading") {
  for (auto t : {table(Family::BI, 2, 1), table(Family::G3), table(Family::F31)}) {
    const auto& alg = t->algebra();
    const int total = static_cast<int>(t->dim());
    for (int x = 0; x < total; ++x)
      for (int y = 0; y < total; ++y) {
        if (t->element(x).kind == BasisKind::Cartan || t->element(y).kind == BasisKind::Cartan) continue;
        const Weight s = t->weight(x) + t->weight(y);
        if (!s.is_zero() && !alg.find_root(s)) CHECK(t->bracket(x, y).empty());
        for (const auto& term : t->bracket(x, y)) CHECK(t->weight(term.index) == s);
      }
    CHECK(check_grading(*t).pass);
  }
}

TEST_CASE("Cartan elements act by coroot pairings") {
  auto t = table(Family::BI, 1, 2);  // d1, e1, e2
  const auto& alg = t->algebra();
  const Weight d1 = alg.unit(0);
  const int e2d = t->root_vector(Q(2) * d1).value();
  const GVector h = t->coroot(d1);
  // <2 d1, h_{d1}> = 2 (2 d1, d1) / (d1, d1) = 4
  const GVector lhs = t->bracket(h, GVector{{e2d, 1}});
  REQUIRE(lhs.size() == 1);
  CHECK(lhs[0].index == e2d);
  CHECK(lhs[0].coeff == 4);
  for (std::size_t i = 0; i < alg.rank(); ++i) {
    const auto& s = alg.simple_roots()[i];
    const Weight mu = W({Q(1, 3), Q(-2), Q(5, 7)});
    if (s.parity == Parity::OddIsotropic) {
      CHECK(t->evaluate(mu, static_cast<int>(i)) == alg.form(mu, s.weight));
    } else {
      CHECK(t->evaluate(mu, static_cast<int>(i)) == coroot_pairing(mu, s, alg));
    }
  }
}

TEST_CASE("[e_a, f_a] is a nonzero multiple of h_a") {
  auto t = table(Family::BII, 2, 2);
  const auto& alg = t->algebra();
  for (const auto& r : alg.positive_roots()) {
    if (r.parity == Parity::OddIsotropic) continue;
    const GVector ef = t->bracket(t->positive(r.index), t->negative(r.index));
    CHECK(proportional(ef, t->coroot(r.weight)));
  }
}

TEST_CASE("root vectors are built from their recorded construction") {
  auto t = table(Family::F31);
  for (int id = 0; id < static_cast<int>(t->dim()); ++id) {
    auto c = t->construction(id);
    if (!c) continue;
    const GVector b = t->bracket(c->first, c->second);
    REQUIRE(b.size() == 1);
    CHECK(b[0].index == id);
    CHECK(b[0].coeff != 0);
  }
}

TEST_CASE("reference commutation list matches after diagonal rescaling") {
  for (auto [m, n] : {std::pair{1, 1}, {1, 2}, {2, 1}, {2, 2}, {1, 3}}) {
    const auto r = match_commutation_list(*table(Family::BII, m, n));
    CAPTURE(m);
    CAPTURE(n);
    CHECK(r.pass);
    CHECK(r.relations.size() == 9);
  }
  CHECK_THROWS_AS(match_commutation_list(*table(Family::BI, 1, 1)), Error);
}

TEST_CASE("a sign change in [e_d, e_-d] breaks the commutation list") {
  BracketTable t = *table(Family::BII, 1, 1);
  const Weight d = t.algebra().unit(0);
  t.flip_sign(t.root_vector(d).value(), t.root_vector(-d).value());
  const auto r = match_commutation_list(t);
  CHECK_FALSE(r.pass);
  CHECK_FALSE(r.failure.empty());
}

TEST_CASE("rendering") {
  auto t = table(Family::G3);
  const int f = t->root_vector(t->algebra().parse_label("d")).value();
  CHECK(t->label(f) == "e_{d}");
  CHECK(t->label(t->negative(t->algebra().find_root(t->algebra().parse_label("d"))->index)) == "f_{d}");
  CHECK_FALSE(t->dump().empty());
}
