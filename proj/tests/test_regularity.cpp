#include <random>

#include "biregkit/parser.hpp"
#include "biregkit/regularity.hpp"
#include "doctest.h"

using namespace bireg;

namespace {

Ideal ideal(const RingPtr& r, std::initializer_list<const char*> gens) {
  std::vector<Polynomial> ps;
  for (auto g : gens) ps.push_back(parse_polynomial(g, r));
  return Ideal(r, ps);
}

Ideal random_binomial_ideal(const RingPtr& r, std::mt19937_64& rng) {
  std::vector<Polynomial> gens;
  const int count = 1 + static_cast<int>(rng() % 3);
  for (int k = 0; k < count; ++k) {
    Bidegree d{1 + static_cast<int>(rng() % 2), static_cast<int>(rng() % 2) + 1};
    auto pool = monomials_of_bidegree(*r, d);
    auto a = pool[rng() % pool.size()];
    auto b = pool[rng() % pool.size()];
    gens.emplace_back(r, std::vector<Term>{{r->one(), a}, {-r->one(), b}});
    if (gens.back().is_zero()) gens.back() = Polynomial::term(r, r->one(), a);
  }
  return Ideal(r, gens);
}

// (0 :_{S/(P+J)} f) in bidegree (a, b) vanishes.
bool colon_vanishes(const Ideal& pj, const Polynomial& f, Bidegree d) {
  Ideal c = colon(pj, f);
  return c.quotient_basis(d).size() == pj.quotient_basis(d).size();
}

}  // namespace

TEST_CASE("s-value examples") {
  auto r = Ring::make(3, 3);
  auto bin = ideal(r, {"y2*x2 - y1*x3", "y3*x1 - y1*x3"});
  auto rep = reg_via_s_values(bin, 7);
  CHECK(rep.reg_x == RegValue::of(0));
  CHECK(rep.reg_y == RegValue::of(0));

  auto zero = reg_via_s_values(Ideal(r), 1);
  CHECK(zero.reg_x == RegValue::of(0));
  CHECK(zero.reg_y == RegValue::of(0));
  for (int s : zero.cert_x->s_values) CHECK(s == 0);

  auto r2 = Ring::make(2, 2);
  auto two = ideal(r2, {"x1*y1", "x1^2*y2"});
  auto rt = reg_via_s_values(two, 3);
  CHECK(rt.reg_x == RegValue::of(1));
  CHECK(rt.reg_y == RegValue::of(0));
  CHECK_FALSE(rt.cert_x->randomized);

  auto one = ideal(Ring::make(1, 1), {"x1*y1"});
  auto c = almost_regular_sequence(one, Direction::kX, 1);
  CHECK(c.s_values == std::vector<int>{0});
  CHECK(reg_via_s_values(ideal(r2, {"1"}), 1).reg_x.kind == RegValue::Kind::kUndefined);
}

TEST_CASE("graded regularity") {
  auto r = Ring::make(2, 0);
  CHECK(graded_regularity(ideal(r, {"x1"})) == 1);
  CHECK(graded_regularity(ideal(r, {"x1^2", "x1*x2", "x2^2"})) == 2);
  CHECK(graded_regularity(ideal(r, {"x1^2", "x2^3"})) == 4);
  CHECK(graded_regularity(ideal(r, {"1"})) == 0);
  CHECK_THROWS_AS(graded_regularity(Ideal(r)), MathError);
  CHECK_THROWS_AS(graded_regularity(ideal(r, {"x1 + x2^2"})), MathError);
  // Needs a coordinate change: (x1 x2) has x2 a zero divisor of unbounded support.
  auto r3 = Ring::make(3, 0);
  auto i = ideal(r3, {"x1*x2", "x1*x3"});
  CHECK(graded_regularity(i) == ideal_reg_from_betti(koszul_betti(i), Direction::kX).value);
}

TEST_CASE("s-values agree with Betti tables and certificates check out") {
  std::mt19937_64 rng(31);
  for (auto [n, m] : {std::pair{2, 2}, std::pair{3, 2}, std::pair{2, 3}}) {
    auto r = Ring::make(n, m);
    for (int trial = 0; trial < 6; ++trial) {
      auto j = random_binomial_ideal(r, rng);
      auto sv = reg_via_s_values(j, 100 + static_cast<std::uint64_t>(trial));
      auto bt = reg_via_betti(j);
      CHECK(sv.reg_x == bt.reg_x);
      CHECK(sv.reg_y == bt.reg_y);
      for (const auto* cert : {&*sv.cert_x, &*sv.cert_y}) {
        std::vector<Polynomial> prefix = j.generators();
        for (std::size_t i = 0; i < cert->forms.size(); ++i) {
          Ideal pj(r, prefix);
          const int s = cert->s_values[i];
          for (int over = 1; over <= 2; ++over) {
            for (int other = 0; other <= 3; ++other) {
              Bidegree d = cert->direction == Direction::kX ? Bidegree{s + over, other} : Bidegree{other, s + over};
              CHECK(colon_vanishes(pj, cert->forms[i], d));
            }
          }
          prefix.push_back(cert->forms[i]);
        }
      }
    }
  }
}

TEST_CASE("determinism") {
  auto r = Ring::make(3, 0);
  auto i = ideal(r, {"x1*x2", "x1*x3"});
  auto a = almost_regular_sequence(i, Direction::kX, 5);
  auto b = almost_regular_sequence(i, Direction::kX, 5);
  CHECK(a.s_values == b.s_values);
  REQUIRE(a.forms.size() == b.forms.size());
  for (std::size_t k = 0; k < a.forms.size(); ++k) CHECK(a.forms[k] == b.forms[k]);
}

TEST_CASE("d-sequences") {
  auto sx = Ring::make(2, 0);
  auto x1 = parse_polynomial("x1", sx);
  auto x2 = parse_polynomial("x2", sx);
  auto reg = is_d_sequence({x1, x2}, Ideal(sx));
  CHECK(reg.is_d_sequence);
  CHECK(reg.minimal_generation);
  CHECK_FALSE(is_d_sequence({x1, x1}, Ideal(sx)).minimal_generation);
  CHECK_THROWS_AS(is_d_sequence({Polynomial(sx)}, Ideal(sx)), MathError);

  auto r = Ring::make(1, 1);
  CHECK(generic_forms_d_sequence(ideal(r, {"x1*y1"}), Direction::kX, 1).report.is_d_sequence);
  auto r2 = Ring::make(2, 2);
  CHECK(generic_forms_d_sequence(Ideal(r2), Direction::kX, 1).report.is_d_sequence);
  CHECK(generic_forms_d_sequence(Ideal(r2), Direction::kY, 1).report.is_d_sequence);
  CHECK_FALSE(generic_forms_d_sequence(ideal(r2, {"x1*y1", "x1^2*y2"}), Direction::kX, 1).report.is_d_sequence);
}

TEST_CASE("d-sequence iff regularity zero") {
  std::mt19937_64 rng(77);
  auto r = Ring::make(2, 2);
  for (int trial = 0; trial < 8; ++trial) {
    auto j = random_binomial_ideal(r, rng);
    auto rep = reg_via_betti(j);
    for (auto dir : {Direction::kX, Direction::kY}) {
      auto g = generic_forms_d_sequence(j, dir, 11);
      const auto& rv = dir == Direction::kX ? rep.reg_x : rep.reg_y;
      CHECK(g.report.is_d_sequence == (rv == RegValue::of(0)));
    }
  }
}
