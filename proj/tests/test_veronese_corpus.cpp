#include "biregkit/corpus.hpp"
#include "biregkit/gin.hpp"
#include "biregkit/parser.hpp"
#include "biregkit/veronese.hpp"
#include "doctest.h"

using namespace bireg;

namespace {

BettiTable table(std::initializer_list<std::pair<std::pair<int, Bidegree>, long>> entries) {
  BettiTable t;
  for (const auto& [k, v] : entries) t.entries[k] = v;
  return t;
}

}  // namespace

TEST_CASE("veronese bounds") {
  auto principal = table({{{0, {0, 0}}, 1}, {{1, {1, 1}}, 1}});
  auto b = veronese_bound(principal, 1, 1);
  CHECK(b.bound_x == 0);
  CHECK(b.bound_y == 0);
  auto th = veronese_zero_thresholds(principal);
  CHECK(th.first == 1);
  CHECK(th.second == 1);

  auto only = table({{{0, {0, 0}}, 1}});
  for (int s = 1; s <= 4; ++s) CHECK(veronese_bound(only, s, s).bound_x == 0);
  CHECK(veronese_zero_thresholds(only).first == 1);

  auto bg = table({{{0, {0, 0}}, 1}, {{1, {1, 1}}, 2}, {{1, {1, 2}}, 1}, {{2, {2, 2}}, 1}, {{2, {1, 2}}, 1}});
  CHECK(veronese_bound(bg, 1, 1).bound_y == 1);

  auto five = table({{{0, {0, 0}}, 1}, {{1, {5, 0}}, 1}});
  for (int s = 1; s < 5; ++s) CHECK(*veronese_bound(five, s, 1).bound_x > 0);
  CHECK(veronese_bound(five, 5, 1).bound_x == 0);
  CHECK(veronese_zero_thresholds(five).first == 5);

  auto off = veronese_bound(principal, 0, 2);
  CHECK_FALSE(off.bound_x);
  CHECK(off.bound_y == 0);
  CHECK_THROWS_AS(veronese_bound(principal, 0, 0), MathError);
  BettiTable partial = principal;
  partial.complete = false;
  CHECK_THROWS_AS(veronese_bound(partial, 1, 1), MathError);
}

TEST_CASE("veronese monotonicity on pinned corpus tables") {
  for (const auto& e : pinned_corpus()) {
    auto t = koszul_betti(e.ideal);
    REQUIRE(t.complete);
    auto [sx, sy] = veronese_zero_thresholds(t);
    REQUIRE(sx);
    REQUIRE(sy);
    for (int s = 1; s <= *sx + 3; ++s) {
      auto lo = veronese_bound(t, s, s);
      auto hi = veronese_bound(t, s + 1, s + 1);
      CHECK(*hi.bound_x <= *lo.bound_x);
      CHECK(*hi.bound_y <= *lo.bound_y);
      CHECK(*veronese_bound(t, 2 * s, 1).bound_x <= *lo.bound_x);
      CHECK((*lo.bound_x == 0) == (s >= *sx));
    }
    for (int s = 1; s <= *sy + 3; ++s) CHECK((*veronese_bound(t, 1, s).bound_y == 0) == (s >= *sy));
  }
}

TEST_CASE("corpus generation") {
  CorpusSpec spec;
  spec.seed = 3;
  spec.count = 8;
  for (auto f : {Flavor::kBistable, Flavor::kStronglyBistable}) {
    spec.flavor = f;
    auto c = generate(spec);
    CHECK(c.size() == 8);
    for (const auto& e : c) {
      auto mono = e.ideal.initial_ideal();
      CHECK(is_bistable(mono));
      if (f == Flavor::kStronglyBistable) CHECK(is_strongly_bistable(mono));
    }
  }
  spec.flavor = Flavor::kEquigeneratedX;
  spec.degree = 3;
  for (const auto& e : generate(spec)) {
    for (const auto& g : e.ideal.generators()) CHECK(std::get<Bidegree>(g.bidegree()) == Bidegree{3, 0});
  }
  spec.flavor = Flavor::kBinomial;
  spec.n = 3;
  spec.m = 3;
  auto bin = generate(spec);
  CHECK(bin.front().ideal.same_as(pinned_binomial()));
  auto again = generate(spec);
  REQUIRE(again.size() == bin.size());
  for (std::size_t k = 0; k < bin.size(); ++k) CHECK(bin[k].ideal.strings() == again[k].ideal.strings());
  spec.flavor = Flavor::kGeneric;
  CHECK(generate(spec).size() == 8);

  spec.min_gens = 3;
  spec.max_gens = 2;
  CHECK_THROWS_AS(generate(spec), MathError);
  CHECK_THROWS_AS(parse_flavor("weird"), MathError);

  auto pinned = pinned_corpus();
  int bistable = 0;
  int binomial = 0;
  for (const auto& e : pinned) {
    if (e.name.find("bistable") != std::string::npos) {
      CHECK(is_bistable(e.ideal.initial_ideal()));
      ++bistable;
    } else {
      ++binomial;
    }
  }
  CHECK(bistable >= 20);
  CHECK(binomial >= 10);
}
