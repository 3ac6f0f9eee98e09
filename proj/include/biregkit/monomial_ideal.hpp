// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "biregkit/ring.hpp"

namespace bireg {

/// Monomial ideal kept as its minimal generating set G(J), sorted descending
/// under the ring's order.
class MonomialIdeal {
 public:
  explicit MonomialIdeal(RingPtr ring) : ring_(std::move(ring)) {}
  MonomialIdeal(RingPtr ring, std::vector<Monomial> gens);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Monomial>& generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_.front().is_one(); }

  bool contains(const Monomial& z) const;
  bool contains(const MonomialIdeal& other) const;
  MonomialIdeal colon(const Monomial& z) const;
  MonomialIdeal operator+(const MonomialIdeal& other) const;
  MonomialIdeal with_variables(std::span<const int> vars) const;
  MonomialIdeal operator*(const MonomialIdeal& other) const;

  /// Standard monomials of a bidegree.
  std::vector<Monomial> standard_monomials(Bidegree d) const;
  /// Largest degree of a monomial in `vars` outside the ideal, when the ideal
  /// holds a pure power of each of `vars` (otherwise nullopt). -1 for the unit ideal.
  std::optional<int> socle_bound(std::span<const int> vars) const;
  /// Distinct lcms of nonempty subsets of G(J) together with 1.
  std::vector<Monomial> lcm_lattice(std::size_t limit = 2000000) const;

  std::vector<std::string> strings() const;
  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) { return a.gens_ == b.gens_; }

 private:
  RingPtr ring_;
  std::vector<Monomial> gens_;
};

/// Minimal elements under divisibility; duplicates removed.
std::vector<Monomial> minimalize(std::vector<Monomial> gens);

}  // namespace bireg
