// SPDX-License-Identifier: Apache-2.0
#include "biregkit/corpus.hpp"

#include <random>
#include <set>

#include "biregkit/parser.hpp"

namespace bireg {

Flavor parse_flavor(const std::string& name) {
  if (name == "bistable") return Flavor::kBistable;
  if (name == "strongly-bistable") return Flavor::kStronglyBistable;
  if (name == "binomial") return Flavor::kBinomial;
  if (name == "generic") return Flavor::kGeneric;
  if (name == "equigenerated-x") return Flavor::kEquigeneratedX;
  throw MathError("unknown corpus flavor '" + name + "'");
}

std::string flavor_name(Flavor f) {
  switch (f) {
    case Flavor::kBistable: return "bistable";
    case Flavor::kStronglyBistable: return "strongly-bistable";
    case Flavor::kBinomial: return "binomial";
    case Flavor::kGeneric: return "generic";
    case Flavor::kEquigeneratedX: return "equigenerated-x";
  }
  return "?";
}

MonomialIdeal bistable_closure(const RingPtr& ring, std::vector<Monomial> seeds, bool strong) {
  const Ring& r = *ring;
  MonomialIdeal cur(ring, std::move(seeds));
  for (;;) {
    std::vector<Monomial> add;
    auto moves = [&](const Monomial& z, int off, int cnt) {
      for (int s = cnt - 1; s >= 0; --s) {
        if (!z[off + s]) continue;
        for (int i = 0; i < s; ++i) {
          Monomial w = z / Monomial::variable(off + s) * Monomial::variable(off + i);
          if (!cur.contains(w)) add.push_back(w);
        }
        if (!strong) break;
      }
    };
    for (const auto& z : cur.generators()) {
      moves(z, 0, r.n());
      moves(z, r.n(), r.m());
    }
    if (add.empty()) return cur;
    auto all = cur.generators();
    all.insert(all.end(), add.begin(), add.end());
    cur = MonomialIdeal(ring, std::move(all));
  }
}

Ideal pinned_binomial(Field field) {
  auto r = Ring::make(3, 3, field);
  return Ideal(r, {parse_polynomial("y2*x2 - y1*x3", r), parse_polynomial("y3*x1 - y1*x3", r)});
}

namespace {

Bidegree random_bidegree(std::mt19937_64& rng, Bidegree top) {
  for (;;) {
    Bidegree d{static_cast<int>(rng() % static_cast<unsigned>(top.x + 1)),
               static_cast<int>(rng() % static_cast<unsigned>(top.y + 1))};
    if (d.x + d.y > 0) return d;
  }
}

Monomial random_monomial(const Ring& r, std::mt19937_64& rng, Bidegree d) {
  auto pool = monomials_of_bidegree(r, d);
  return pool[rng() % pool.size()];
}

Scalar random_coefficient(const Ring& r, std::mt19937_64& rng) {
  long c = 0;
  while (c == 0) c = static_cast<long>(rng() % 11) - 5;
  return r.scalar(c);
}

}  // namespace

std::vector<CorpusEntry> generate(const CorpusSpec& spec) {
  if (spec.count < 1 || spec.min_gens < 1 || spec.min_gens > spec.max_gens) throw MathError("empty corpus range");
  if (spec.max_bidegree.x < 0 || spec.max_bidegree.y < 0 || spec.max_bidegree.x + spec.max_bidegree.y < 1) {
    throw MathError("empty corpus range");
  }
  const bool x_only = spec.flavor == Flavor::kEquigeneratedX;
  if ((x_only && (spec.n < 1 || spec.degree < 1)) || (!x_only && (spec.max_bidegree.x > 0 && spec.n < 1))) {
    throw MathError("empty corpus range");
  }
  if (!x_only && spec.m < 1 && spec.max_bidegree.x < 1) throw MathError("empty corpus range");
  auto ring = Ring::make(spec.n, spec.m, spec.field);
  std::mt19937_64 rng(spec.seed);
  std::vector<CorpusEntry> out;
  std::set<std::vector<std::string>> seen;
  const std::string tag = flavor_name(spec.flavor);
  if (spec.flavor == Flavor::kBinomial && spec.n == 3 && spec.m == 3) {
    out.push_back({"binomial-pinned", pinned_binomial(spec.field)});
    seen.insert(out.back().ideal.strings());
  }
  Bidegree top = spec.max_bidegree;
  if (spec.n == 0) top.x = 0;
  if (spec.m == 0) top.y = 0;
  int attempts = 0;
  while (static_cast<int>(out.size()) < spec.count && attempts < 50 * spec.count) {
    ++attempts;
    const int gens = spec.min_gens + static_cast<int>(rng() % static_cast<unsigned>(spec.max_gens - spec.min_gens + 1));
    Ideal j(ring);
    switch (spec.flavor) {
      case Flavor::kBistable:
      case Flavor::kStronglyBistable: {
        std::vector<Monomial> seeds;
        for (int k = 0; k < gens; ++k) seeds.push_back(random_monomial(*ring, rng, random_bidegree(rng, top)));
        j = Ideal::from_monomials(bistable_closure(ring, seeds, spec.flavor == Flavor::kStronglyBistable));
        break;
      }
      case Flavor::kBinomial: {
        std::vector<Polynomial> ps;
        for (int k = 0; k < gens; ++k) {
          Bidegree d = random_bidegree(rng, top);
          auto a = random_monomial(*ring, rng, d);
          auto b = random_monomial(*ring, rng, d);
          if (a == b) {
            ps.push_back(Polynomial::term(ring, ring->one(), a));
          } else {
            ps.emplace_back(ring, std::vector<Term>{{ring->one(), a}, {-ring->one(), b}});
          }
        }
        j = Ideal(ring, ps);
        break;
      }
      case Flavor::kGeneric: {
        std::vector<Polynomial> ps;
        for (int k = 0; k < gens; ++k) {
          std::vector<Term> ts;
          for (const auto& z : monomials_of_bidegree(*ring, random_bidegree(rng, top))) {
            ts.push_back({random_coefficient(*ring, rng), z});
          }
          ps.emplace_back(ring, ts);
        }
        j = Ideal(ring, ps);
        break;
      }
      case Flavor::kEquigeneratedX: {
        std::vector<Polynomial> ps;
        for (int k = 0; k < gens; ++k) {
          std::vector<Term> ts;
          const int terms = 1 + static_cast<int>(rng() % 2);
          for (int q = 0; q < terms; ++q) {
            ts.push_back({random_coefficient(*ring, rng), random_monomial(*ring, rng, {spec.degree, 0})});
          }
          Polynomial p(ring, ts);
          if (p.is_zero()) p = Polynomial::term(ring, ring->one(), ts.front().mono);
          ps.push_back(std::move(p));
        }
        j = Ideal(ring, ps);
        break;
      }
    }
    if (spec.flavor == Flavor::kBinomial && j.is_monomial()) continue;
    if (j.is_unit() || !seen.insert(j.strings()).second) continue;
    out.push_back({tag + "-" + std::to_string(out.size()), std::move(j)});
  }
  return out;
}

std::vector<CorpusEntry> pinned_corpus() {
  std::vector<CorpusEntry> out;
  auto take = [&](CorpusSpec spec) {
    for (auto& e : generate(spec)) {
      e.name = std::to_string(spec.n) + "x" + std::to_string(spec.m) + "-s" + std::to_string(spec.seed) + "-" + e.name;
      out.push_back(std::move(e));
    }
  };
  take({.seed = 11, .n = 2, .m = 2, .max_bidegree = {2, 2}, .min_gens = 1, .max_gens = 3, .count = 8,
        .flavor = Flavor::kBistable});
  take({.seed = 12, .n = 3, .m = 2, .max_bidegree = {2, 2}, .min_gens = 1, .max_gens = 3, .count = 6,
        .flavor = Flavor::kBistable});
  take({.seed = 13, .n = 2, .m = 3, .max_bidegree = {2, 2}, .min_gens = 1, .max_gens = 3, .count = 6,
        .flavor = Flavor::kBistable});
  take({.seed = 14, .n = 3, .m = 3, .max_bidegree = {2, 1}, .min_gens = 1, .max_gens = 2, .count = 4,
        .flavor = Flavor::kStronglyBistable});
  take({.seed = 21, .n = 3, .m = 3, .max_bidegree = {2, 2}, .min_gens = 1, .max_gens = 2, .count = 4,
        .flavor = Flavor::kBinomial});
  take({.seed = 22, .n = 2, .m = 2, .max_bidegree = {2, 2}, .min_gens = 1, .max_gens = 3, .count = 5,
        .flavor = Flavor::kBinomial});
  take({.seed = 23, .n = 3, .m = 2, .max_bidegree = {2, 1}, .min_gens = 1, .max_gens = 3, .count = 4,
        .flavor = Flavor::kBinomial});
  return out;
}

}  // namespace bireg
