#include <random>

#include "biregkit/blowup.hpp"
#include "biregkit/parser.hpp"
#include "doctest.h"

using namespace bireg;

namespace {

std::vector<Polynomial> polys(const RingPtr& r, std::initializer_list<const char*> gens) {
  std::vector<Polynomial> ps;
  for (auto g : gens) ps.push_back(parse_polynomial(g, r));
  return ps;
}

Ideal ideal(const RingPtr& r, std::initializer_list<const char*> gens) { return Ideal(r, polys(r, gens)); }

MonomialIdeal monos(const RingPtr& r, std::initializer_list<const char*> gens) {
  std::vector<Monomial> ms;
  for (auto g : gens) ms.push_back(parse_polynomial(g, r).lead_monomial());
  return MonomialIdeal(r, ms);
}

// phi(x_i) = x_i, phi(y_j) = f_j (t = 1 suffices for bihomogeneous input).
Polynomial phi(const Polynomial& p, const std::vector<Polynomial>& fs) {
  const RingPtr& sx = fs.front().ring();
  Polynomial out(sx);
  for (const auto& t : p.terms()) {
    Monomial u;
    for (int i = 0; i < sx->n(); ++i) u[i] = t.mono[i];
    Polynomial term = Polynomial::term(sx, t.coeff, u);
    for (std::size_t k = 0; k < fs.size(); ++k) term = term * fs[k].pow(t.mono[p.ring()->y(static_cast<int>(k))]);
    out += term;
  }
  return out;
}

// Brute-force (0 :_R (x_n..x_{i+1}) x_i) in bidegree (a, j) for monomial J.
int brute_m(const MonomialIdeal& j, int i, int jj, int amax) {
  const Ring& r = *j.ring();
  std::vector<Monomial> gens = j.generators();
  for (int k = i + 1; k < r.n(); ++k) gens.push_back(Monomial::variable(r.x(k)));
  MonomialIdeal a(j.ring(), gens);
  int best = 0;
  for (int deg = 0; deg <= amax; ++deg) {
    for (const auto& w : monomials_of_bidegree(r, {deg, jj})) {
      if (!a.contains(w) && a.contains(w * Monomial::variable(r.x(i)))) best = std::max(best, deg);
    }
  }
  return best;
}

}  // namespace

TEST_CASE("rees and symmetric presentations") {
  auto sx = Ring::make(2, 0);
  auto lin = polys(sx, {"x1", "x2"});
  auto rees = rees_ideal(lin);
  CHECK(rees.d == 1);
  CHECK(rees.j.same_as(ideal(rees.j.ring(), {"x1*y2 - x2*y1"})));
  auto sym = symmetric_ideal(lin);
  CHECK(sym.j.same_as(rees.j));

  CHECK(rees_ideal(polys(sx, {"x1"})).j.is_zero());
  CHECK(symmetric_ideal(polys(sx, {"x1"})).j.is_zero());

  auto msq = polys(sx, {"x1^2", "x1*x2", "x2^2"});
  auto rm = rees_ideal(msq);
  auto s3 = rm.j.ring();
  for (const char* g : {"x2*y1 - x1*y2", "x2*y2 - x1*y3", "y2^2 - y1*y3"}) CHECK(rm.j.contains(parse_polynomial(g, s3)));
  for (const auto& g : rm.j.generators()) CHECK(phi(g, msq).is_zero());
  CHECK(rm.j.is_bihomogeneous());
  // strands recover powers
  Ideal base(sx, msq);
  for (int jj = 1; jj <= 3; ++jj) {
    auto pw = power_ideal(base, jj);
    for (int a = 0; a <= 3; ++a) {
      const auto all = monomials_of_bidegree(*sx, {a + 2 * jj, 0}).size();
      CHECK(rm.j.quotient_basis({a, jj}).size() == all - pw.quotient_basis({a + 2 * jj, 0}).size());
    }
  }
  auto sm = symmetric_ideal(msq);
  CHECK(sm.j.generators().size() == 2);
  for (const auto& g : sm.j.generators()) CHECK(std::get<Bidegree>(g.bidegree()) == Bidegree{1, 1});

  CHECK_THROWS_AS(rees_ideal(polys(sx, {"x1", "x2^2"})), MathError);
}

TEST_CASE("powers") {
  auto sx = Ring::make(2, 0);
  auto p = power_ideal(ideal(sx, {"x1"}), 3);
  CHECK(p.same_as(ideal(sx, {"x1^3"})));
  auto sq = power_ideal(ideal(sx, {"x1", "x2"}), 2);
  CHECK(sq.generators().size() == 3);
  CHECK(sq.same_as(ideal(sx, {"x1^2", "x1*x2", "x2^2"})));
  // x1^2 x2^2 appears twice among products of m^2
  CHECK(power_ideal(ideal(sx, {"x1^2", "x1*x2", "x2^2"}), 2).generators().size() == 5);
}

TEST_CASE("power regularity tables") {
  auto sx = Ring::make(2, 0);
  auto msq = power_reg_table(polys(sx, {"x1^2", "x1*x2", "x2^2"}), 4);
  CHECK(msq.rows == std::vector<std::pair<int, int>>{{1, 2}, {2, 4}, {3, 6}, {4, 8}});
  REQUIRE(msq.fitted);
  CHECK(msq.fitted->slope == 2);
  CHECK(msq.fitted->intercept == 0);
  CHECK(msq.fitted->onset == 1);

  auto lin = power_reg_table(polys(sx, {"x1", "x2"}), 4);
  CHECK(lin.rows == std::vector<std::pair<int, int>>{{1, 1}, {2, 2}, {3, 3}, {4, 4}});
  auto ci = power_reg_table(polys(sx, {"x1^2", "x2^2"}), 3);
  CHECK(ci.rows == std::vector<std::pair<int, int>>{{1, 3}, {2, 5}, {3, 7}});
  CHECK(ci.fitted->intercept == 1);

  // symmetric powers coincide for linear type
  auto sym = power_reg_table(polys(sx, {"x1", "x2"}), 3, BlowupKind::kSymmetric);
  CHECK(sym.rows == std::vector<std::pair<int, int>>{{1, 1}, {2, 2}, {3, 3}});
  auto symsq = power_reg_table(polys(sx, {"x1^2", "x1*x2", "x2^2"}), 3, BlowupKind::kSymmetric);
  CHECK(symsq.rows == std::vector<std::pair<int, int>>{{1, 2}, {2, 4}, {3, 6}});

  CHECK_FALSE(fit_tail({{1, 3}}, 2));
  CHECK_FALSE(fit_tail({{1, 3}, {2, 4}}, 2));
  CHECK(fit_tail({{1, 3}, {2, 4}, {3, 6}}, 2)->onset == 2);
}

TEST_CASE("strand route matches direct powers") {
  auto sx = Ring::make(2, 0);
  for (auto fs : {polys(sx, {"x1^2", "x2^2"}), polys(sx, {"x1^2", "x1*x2"}), polys(sx, {"x1^3", "x1*x2^2", "x2^3"})}) {
    auto p = rees_ideal(fs);
    const int d = p.d;
    for (int jj = 1; jj <= 3; ++jj) {
      CHECK(strand_regularity(p.j, jj).value + jj * d == graded_regularity(power_ideal(Ideal(sx, fs), jj)));
    }
  }
}

TEST_CASE("linearity threshold from bigin") {
  auto sx = Ring::make(2, 0);
  auto lin = linearity_threshold_bigin(rees_ideal(polys(sx, {"x1", "x2"})), 3, 5);
  CHECK(lin.j0 == 1);
  CHECK(lin.c_bound == 0);
  auto principal = linearity_threshold_bigin(rees_ideal(polys(sx, {"x1^2"})), 3, 5);
  CHECK(principal.j0 == 0);
  CHECK(principal.c_bound == 0);

  for (auto fs : {polys(sx, {"x1^2", "x1*x2", "x2^2"}), polys(sx, {"x1^2", "x2^2"})}) {
    auto th = linearity_threshold_bigin(rees_ideal(fs), 3, 9);
    auto table = power_reg_table(fs, std::max(th.j0 + 2, 4));
    const int d = table.d;
    std::optional<int> c;
    for (auto [jj, reg] : table.rows) {
      CHECK(reg <= jj * d + th.c_bound);
      if (jj >= th.j0) {
        if (!c) c = reg - jj * d;
        CHECK(reg - jj * d == *c);
      }
    }
    REQUIRE(c);
    CHECK(*c >= 0);
    CHECK(*c <= th.c_bound);
  }
}

TEST_CASE("m tables") {
  auto r = Ring::make(2, 2);
  auto a = m_table(monos(r, {"x1*y1", "x1^2*y2"}), 3);
  CHECK(a.m[0] == std::vector<int>{0, 1, 1, 1});
  CHECK(a.c[0] == 1);
  auto b = m_table(monos(r, {"x1*y1"}), 3);
  CHECK(b.m[0] == std::vector<int>{0, 0, 0, 0});
  auto r3 = Ring::make(3, 3);
  auto x = m_table(monos(r3, {"y2*x1", "y1*x1", "y1^2*x2"}), 4);
  for (const auto& row : x.m) {
    for (int v : row) CHECK(v == 0);
  }
  CHECK_THROWS_AS(m_table(monos(Ring::make(2, 0), {"x2"}), 2), MathError);
}

TEST_CASE("m tables against brute force, stabilization") {
  std::mt19937_64 rng(4);
  auto r = Ring::make(2, 2);
  std::vector<int> all{0, 1, 2, 3};
  int seen = 0;
  for (int trial = 0; trial < 400 && seen < 20; ++trial) {
    std::vector<Monomial> gens;
    for (int k = 0; k < 3; ++k) {
      auto pool = monomials_of_degree(all, 1 + static_cast<int>(rng() % 3));
      gens.push_back(pool[rng() % pool.size()]);
    }
    MonomialIdeal j(r, gens);
    if (!is_bistable(j)) continue;
    ++seen;
    auto t = m_table(j, 4);
    for (int i = 0; i < r->n(); ++i) {
      for (int jj = 0; jj <= 4; ++jj) {
        CHECK(t.m[i][jj] == brute_m(j, i, jj, t.mx + 2));
        CHECK(t.m[i][jj] <= std::max(t.mx - 1, 0));
        if (jj >= t.my) CHECK(t.m[i][jj] == t.c[i]);
      }
    }
  }
  CHECK(seen >= 10);
}

TEST_CASE("w invariant") {
  auto r = Ring::make(2, 2);
  auto zero = w_invariant(Ideal(r), 1);
  CHECK_FALSE(zero.w);
  CHECK(zero.complete);

  // One x variable: ker of l on H_1 = ((J : x1) cap (J : l)) / J, shifted by (1, 0).
  std::mt19937_64 rng(8);
  auto r1 = Ring::make(1, 2);
  for (auto j : {ideal(r1, {"x1*y1"}), ideal(r1, {"x1*y1^2", "x1^2*y2"}), ideal(r1, {"x1*y1*y2", "x1^2*y1"})}) {
    auto w = w_invariant(j, 3);
    REQUIRE(w.form);
    Ideal k = intersect(colon(j, parse_polynomial("x1", r1)), colon(j, *w.form));
    std::optional<int> brute;
    for (int b = 0; b <= w.b_max; ++b) {
      for (int a = 0; a <= 4; ++a) {
        if (k.quotient_basis({a, b}).size() != j.quotient_basis({a, b}).size()) brute = b;
      }
    }
    CHECK(w.w == brute);
  }
}

TEST_CASE("complete intersections") {
  CHECK(ci_reg_formula({{1, 1}, {1, 1}, {1, 1}}) == 0);
  CHECK(ci_reg_formula({{2, 1}}) == 1);
  CHECK(ci_reg_formula({{3, 1}, {2, 1}}) == 3);
  CHECK_THROWS_AS(ci_reg_formula({{0, 1}}), MathError);
  CHECK_THROWS_AS(ci_reg_formula({{1, 2}}), MathError);

  auto sx = Ring::make(2, 0);
  auto p = rees_ideal(polys(sx, {"x1", "x2"}));
  CHECK(is_complete_intersection(p.j));
  std::vector<Bidegree> zs;
  for (const auto& g : p.j.generators()) zs.push_back(std::get<Bidegree>(g.bidegree()));
  CHECK(ci_reg_formula(zs) == 0);
  for (int jj = 1; jj <= 3; ++jj) CHECK(strand_regularity(p.j, jj) == RegValue::of(0));

  auto r = Ring::make(2, 2);
  CHECK(krull_dimension(Ideal(r)) == 4);
  CHECK(krull_dimension(ideal(r, {"x1*y1"})) == 3);
  CHECK(krull_dimension(ideal(r, {"x1*y1", "x1*y2"})) == 3);
  CHECK_FALSE(is_complete_intersection(ideal(r, {"x1*y1", "x1*y2"})));
  // Ci formula against strands for a two-form regular sequence with deg_x 2 and 1.
  auto ci = ideal(r, {"x1^2*y1", "x2*y2"});
  REQUIRE(is_complete_intersection(ci));
  for (int jj = 2; jj <= 4; ++jj) CHECK(strand_regularity(ci, jj) == RegValue::of(ci_reg_formula({{2, 1}, {1, 1}})));
}

TEST_CASE("hilbert burch") {
  auto sx = Ring::make(2, 0);
  auto msq = hilbert_burch_analysis(polys(sx, {"x1^2", "x1*x2", "x2^2"}));
  CHECK(msq.is_codim2_cm);
  CHECK(msq.matrix.size() == 3);
  CHECK(msq.matrix[0].size() == 2);
  CHECK(msq.linear_case);
  CHECK(msq.threshold == 1);
  auto lin = hilbert_burch_analysis(polys(sx, {"x1", "x2"}));
  CHECK(lin.is_codim2_cm);
  CHECK(lin.linear_case);
  CHECK(lin.threshold == 1);
  CHECK_FALSE(hilbert_burch_analysis(polys(sx, {"x1^2"})).is_codim2_cm);
  CHECK_FALSE(hilbert_burch_analysis(polys(sx, {"x1^2", "x1*x2"})).is_codim2_cm);
  auto cube = hilbert_burch_analysis(polys(sx, {"x1^3", "x2^3"}));
  CHECK(cube.is_codim2_cm);
  CHECK_FALSE(cube.linear_case);
  CHECK(cube.threshold == 1);
}

TEST_CASE("threshold report: stabilization past j0_fourth") {
  auto sx = Ring::make(2, 0);
  for (auto fs : {polys(sx, {"x1", "x2"}), polys(sx, {"x1^2", "x1*x2", "x2^2"}), polys(sx, {"x1^2", "x2^2"})}) {
    auto th = thresholds(fs, BlowupKind::kRees, 3, 21);
    auto table = power_reg_table(fs, th.j0_fourth + 2);
    for (auto [jj, reg] : table.rows) {
      if (jj >= th.j0_fourth && jj < table.rows.back().first) CHECK(table.rows[jj].second == reg + table.d);
      if (!th.w.w || jj > *th.w.w) {
        if (jj < table.rows.back().first) CHECK(table.rows[jj].second >= reg + table.d);
      }
    }
  }
}
