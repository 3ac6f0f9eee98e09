#include <map>
#include <random>

#include "biregkit/parser.hpp"
#include "doctest.h"

using namespace bireg;

namespace {

Monomial mono(const Ring& r, std::initializer_list<int> xs, std::initializer_list<int> ys) {
  Monomial z;
  int i = 0;
  for (int e : xs) z[r.x(i++)] = static_cast<Exponent>(e);
  int j = 0;
  for (int e : ys) z[r.y(j++)] = static_cast<Exponent>(e);
  return z;
}

Monomial random_mono(const Ring& r, std::mt19937_64& rng, int maxe) {
  std::uniform_int_distribution<int> d(0, maxe);
  Monomial z;
  for (int v = 0; v < r.nvars(); ++v) z[v] = static_cast<Exponent>(d(rng));
  return z;
}

Polynomial random_poly(const RingPtr& r, std::mt19937_64& rng, int nterms) {
  std::uniform_int_distribution<long> c(-9, 9);
  std::vector<Term> terms;
  for (int k = 0; k < nterms; ++k) terms.push_back({Scalar(mpq_class(c(rng), 1 + std::abs(c(rng)))), random_mono(*r, rng, 3)});
  return Polynomial(r, terms);
}

}  // namespace

TEST_CASE("default order basics") {
  auto r = Ring::make(1, 1);
  CHECK(r->order().compare(mono(*r, {0}, {1}), mono(*r, {1}, {0})) == 1);
  auto z = mono(*r, {2}, {1});
  CHECK(r->order().compare(z, z) == 0);
}

TEST_CASE("default order on mixed (1,1) monomials follows revlex with x_n smallest") {
  auto r = Ring::make(2, 2);
  auto y1x2 = mono(*r, {0, 1}, {1, 0});
  auto y2x1 = mono(*r, {1, 0}, {0, 1});
  // Revlex looks at x2 first: y1x2 carries it, so it is the smaller one.
  CHECK(r->order().compare(y2x1, y1x2) == 1);
  auto all = monomials_of_bidegree(*r, {1, 1});
  std::sort(all.begin(), all.end(), [&](auto& a, auto& b) { return r->order().greater(a, b); });
  for (std::size_t i = 0; i + 1 < all.size(); ++i) CHECK(r->order().compare(all[i], all[i + 1]) == 1);
  CHECK(all.front() == mono(*r, {1, 0}, {1, 0}));
  CHECK(all.back() == mono(*r, {0, 1}, {0, 1}));
}

TEST_CASE("orders are multiplicative and refine total degree") {
  std::mt19937_64 rng(11);
  for (auto order : {TermOrder::bigraded(3, 2), TermOrder::revlex_x(3, 2), TermOrder::revlex_y(3, 2)}) {
    auto r = Ring::make(3, 2, Field::rationals(), order);
    for (int k = 0; k < 500; ++k) {
      auto a = random_mono(*r, rng, 3);
      auto b = random_mono(*r, rng, 3);
      auto w = random_mono(*r, rng, 2);
      int c = r->order().compare(a, b);
      CHECK(c == -r->order().compare(b, a));
      CHECK(r->order().compare(a * w, b * w) == c);
      CHECK((c == 0) == (a == b));
      if (a.degree() > b.degree()) CHECK(c == 1);
    }
  }
}

TEST_CASE("rational arithmetic is exact") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> d(1, 1000000);
  for (int k = 0; k < 200; ++k) {
    Scalar q(mpq_class(d(rng), d(rng)));
    CHECK((q * q.inverse()).is_one());
  }
  auto f = Field::prime(kDefaultPrime);
  auto h = Scalar::from_rational(mpq_class(1, 2), f);
  CHECK((h + h).is_one());
  CHECK_THROWS_AS(Field::prime(91), MathError);
}

TEST_CASE("polynomial arithmetic") {
  auto r = Ring::make(1, 1);
  auto x1 = Polynomial::variable(r, r->x(0));
  auto y1 = Polynomial::variable(r, r->y(0));
  auto p = x1 + y1;
  CHECK((p + (-p)).is_zero());
  CHECK((x1 + y1) * (x1 - y1) == x1 * x1 - y1 * y1);
}

TEST_CASE("multiplication matches naive convolution") {
  auto r = Ring::make(2, 2);
  std::mt19937_64 rng(3);
  for (int k = 0; k < 50; ++k) {
    auto p = random_poly(r, rng, 5);
    auto q = random_poly(r, rng, 5);
    std::map<Monomial, mpq_class> naive;
    for (const auto& a : p.terms())
      for (const auto& b : q.terms()) naive[a.mono * b.mono] += a.coeff.rational() * b.coeff.rational();
    std::vector<Term> terms;
    for (auto& [m, c] : naive) terms.push_back({Scalar(c), m});
    CHECK(p * q == Polynomial(r, terms));
  }
}

TEST_CASE("bidegree") {
  auto r = Ring::make(3, 3);
  auto d = parse_polynomial("x1^2*y2", r).bidegree();
  REQUIRE(std::holds_alternative<Bidegree>(d));
  CHECK(std::get<Bidegree>(d) == Bidegree{2, 1});
  CHECK(std::holds_alternative<NotBihomogeneous>(parse_polynomial("x1 + y1", r).bidegree()));
  CHECK(std::get<Bidegree>(parse_polynomial("y2*x2 - y1*x3", r).bidegree()) == Bidegree{1, 1});
  CHECK(std::holds_alternative<ZeroPolynomial>(Polynomial(r).bidegree()));
}

TEST_CASE("parser") {
  auto r = Ring::make(3, 3);
  auto p = parse_polynomial("2x1y2 - 1/3*(x2+y1)^2", r);
  auto q = parse_polynomial("2*x1*y2 - 1/3*x2^2 - 2/3*x2*y1 - 1/3*y1^2", r);
  CHECK(p == q);
  CHECK(parse_polynomial(p.to_string(), r) == p);
  CHECK(parse_polynomial("-x1 + 0", r) == -Polynomial::variable(r, 0));
  try {
    parse_polynomial("x1 + x4", r, 2);
    FAIL("expected error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 6);
  }
  CHECK_THROWS_AS(parse_polynomial("x1 +", r), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x1 ** 2", r), ParseError);
  CHECK_THROWS_AS(parse_polynomial("", r), ParseError);
}
