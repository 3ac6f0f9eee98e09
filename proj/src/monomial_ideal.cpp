// SPDX-License-Identifier: Apache-2.0
#include "biregkit/monomial_ideal.hpp"

#include <algorithm>
#include <unordered_set>

namespace bireg {

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    int da = a.degree();
    int db = b.degree();
    return da != db ? da < db : a < b;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> out;
  for (const auto& g : gens) {
    bool redundant = false;
    for (const auto& h : out) {
      if (h.divides(g)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) out.push_back(g);
  }
  return out;
}

MonomialIdeal::MonomialIdeal(RingPtr ring, std::vector<Monomial> gens) : ring_(std::move(ring)) {
  gens_ = minimalize(std::move(gens));
  std::sort(gens_.begin(), gens_.end(), [&](const Monomial& a, const Monomial& b) { return ring_->order().greater(a, b); });
}

bool MonomialIdeal::contains(const Monomial& z) const {
  for (const auto& g : gens_) {
    if (g.divides(z)) return true;
  }
  return false;
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
  return std::all_of(other.gens_.begin(), other.gens_.end(), [&](const Monomial& g) { return contains(g); });
}

MonomialIdeal MonomialIdeal::colon(const Monomial& z) const {
  std::vector<Monomial> out;
  out.reserve(gens_.size());
  for (const auto& g : gens_) out.push_back(g / gcd(g, z));
  return MonomialIdeal(ring_, std::move(out));
}

MonomialIdeal MonomialIdeal::operator+(const MonomialIdeal& other) const {
  auto all = gens_;
  all.insert(all.end(), other.gens_.begin(), other.gens_.end());
  return MonomialIdeal(ring_, std::move(all));
}

MonomialIdeal MonomialIdeal::operator*(const MonomialIdeal& other) const {
  std::vector<Monomial> all;
  for (const auto& a : gens_)
    for (const auto& b : other.gens_) all.push_back(a * b);
  return MonomialIdeal(ring_, std::move(all));
}

MonomialIdeal MonomialIdeal::with_variables(std::span<const int> vars) const {
  auto all = gens_;
  for (int v : vars) all.push_back(Monomial::variable(v));
  return MonomialIdeal(ring_, std::move(all));
}

std::vector<Monomial> MonomialIdeal::standard_monomials(Bidegree d) const {
  auto all = monomials_of_bidegree(*ring_, d);
  std::vector<Monomial> out;
  for (const auto& z : all) {
    if (!contains(z)) out.push_back(z);
  }
  return out;
}

std::optional<int> MonomialIdeal::socle_bound(std::span<const int> vars) const {
  if (is_unit()) return -1;
  // Pure powers among the generators.
  std::vector<int> bound(vars.size(), -1);
  for (std::size_t k = 0; k < vars.size(); ++k) {
    for (const auto& g : gens_) {
      if (g.degree() == g[vars[k]]) {
        bound[k] = bound[k] < 0 ? g[vars[k]] : std::min<int>(bound[k], g[vars[k]]);
      }
    }
    if (bound[k] < 0) return std::nullopt;
  }
  // Walk the finite set of standard monomials in `vars` degree by degree.
  int best = -1;
  std::vector<Monomial> layer{Monomial{}};
  while (!layer.empty()) {
    std::vector<Monomial> next;
    std::unordered_set<Monomial, MonomialHash> seen;
    for (const auto& z : layer) {
      if (contains(z)) continue;
      best = std::max(best, z.degree());
      for (std::size_t k = 0; k < vars.size(); ++k) {
        if (z[vars[k]] + 1 >= bound[k]) continue;
        Monomial w = z * Monomial::variable(vars[k]);
        if (seen.insert(w).second) next.push_back(w);
      }
    }
    layer = std::move(next);
  }
  return best;
}

std::vector<Monomial> MonomialIdeal::lcm_lattice(std::size_t limit) const {
  std::unordered_set<Monomial, MonomialHash> seen{Monomial{}};
  std::vector<Monomial> all{Monomial{}};
  for (const auto& g : gens_) {
    std::size_t current = all.size();
    for (std::size_t k = 0; k < current; ++k) {
      Monomial l = lcm(all[k], g);
      if (seen.insert(l).second) {
        all.push_back(l);
        if (all.size() > limit) throw MathError("lcm lattice exceeds " + std::to_string(limit) + " elements");
      }
    }
  }
  return all;
}

std::vector<std::string> MonomialIdeal::strings() const {
  std::vector<std::string> out;
  for (const auto& g : gens_) out.push_back(ring_->monomial_string(g));
  return out;
}

}  // namespace bireg
