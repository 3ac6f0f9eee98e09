// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "biregkit/monomial_ideal.hpp"
#include "biregkit/polynomial.hpp"

namespace bireg {

/// Reduced Groebner basis under the ring's order: monic, sorted by ascending
/// leading monomial.
std::vector<Polynomial> groebner_basis(const RingPtr& ring, std::vector<Polynomial> gens);

/// Full reduction; `gb` need not be reduced but must have monic leaders.
Polynomial normal_form(Polynomial p, const std::vector<Polynomial>& gb);

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

/// Buchberger criterion: every S-pair reduces to zero.
bool is_groebner_basis(const std::vector<Polynomial>& gb);

/// q with q f = p, or nullopt when f does not divide p.
std::optional<Polynomial> divide_exact(const Polynomial& p, const Polynomial& f);

class Ideal {
 public:
  explicit Ideal(RingPtr ring);
  Ideal(RingPtr ring, std::vector<Polynomial> gens);
  static Ideal from_monomials(const MonomialIdeal& mono);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  /// Cached reduced basis for the ring's order.
  const std::vector<Polynomial>& groebner() const;
  MonomialIdeal initial_ideal() const;

  bool is_zero() const { return groebner().empty(); }
  bool is_unit() const;
  bool is_bihomogeneous() const;
  bool is_monomial() const;

  Polynomial normal_form(const Polynomial& p) const { return bireg::normal_form(p.in_ring(ring_), groebner()); }
  bool contains(const Polynomial& p) const { return normal_form(p).is_zero(); }
  bool contains(const Ideal& other) const;
  bool same_as(const Ideal& other) const { return contains(other) && other.contains(*this); }

  Ideal with_order(TermOrder order) const;
  /// Moves generators into a ring with the same x,y variables (and possibly
  /// a different order or auxiliary count).
  Ideal in_ring(RingPtr target) const;

  /// Standard monomials of bidegree d: a K-basis of (S/J)_d.
  std::vector<Monomial> quotient_basis(Bidegree d) const { return initial_ideal().standard_monomials(d); }
  std::vector<std::string> strings() const;

 private:
  RingPtr ring_;
  std::vector<Polynomial> gens_;
  mutable std::shared_ptr<std::vector<Polynomial>> gb_;
};

Ideal operator+(const Ideal& a, const Ideal& b);
Ideal operator*(const Ideal& a, const Ideal& b);
Ideal intersect(const Ideal& a, const Ideal& b);
Ideal colon(const Ideal& j, const Polynomial& f);
/// J intersected with the subring avoiding `drop`; stays in J's ring.
Ideal eliminate(const Ideal& j, const std::vector<int>& drop);

/// Generators of J free of the variables in `drop`. `grading`, when every
/// generator is homogeneous for it, is used to keep the order degree-first.
std::vector<Polynomial> eliminate_variables(const RingPtr& ring, const std::vector<Polynomial>& gens,
                                            const std::vector<int>& drop,
                                            const std::optional<std::vector<int>>& grading);

/// Syzygy vector: component k multiplies the k-th input.
using Syzygy = std::vector<Polynomial>;

/// Minimal homogeneous generators of the first syzygy module of bihomogeneous
/// nonzero inputs, ordered by ascending bidegree.
std::vector<Syzygy> syzygies(const std::vector<Polynomial>& fs);

/// Bidegree of sum_k s_k f_k for a bihomogeneous syzygy.
Bidegree syzygy_degree(const Syzygy& s, const std::vector<Polynomial>& fs);

/// Whether `v` lies in the module spanned by `gens` (all bihomogeneous).
bool in_module_span(const Syzygy& v, const std::vector<Syzygy>& gens, const std::vector<Polynomial>& fs);

}  // namespace bireg
