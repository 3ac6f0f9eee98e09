// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <variant>
#include <vector>

#include "biregkit/ring.hpp"

namespace bireg {

struct Term {
  Scalar coeff;
  Monomial mono;
};

struct ZeroPolynomial {};
struct NotBihomogeneous {};
using BidegreeResult = std::variant<Bidegree, NotBihomogeneous, ZeroPolynomial>;

/// Terms strictly descending under the ring's order, no zero coefficients.
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}
  /// Sorts and combines arbitrary terms.
  Polynomial(RingPtr ring, std::vector<Term> terms);

  static Polynomial constant(RingPtr ring, const Scalar& c);
  static Polynomial term(RingPtr ring, const Scalar& c, const Monomial& mono);
  static Polynomial variable(RingPtr ring, int var);
  /// Trusts that `terms` is already strictly descending with nonzero coefficients.
  static Polynomial from_sorted(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  const Monomial& lead_monomial() const { return terms_.front().mono; }
  const Scalar& lead_coeff() const { return terms_.front().coeff; }

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial scaled(const Scalar& c) const;
  Polynomial times_term(const Scalar& c, const Monomial& mono) const;
  /// this += c * mono * g, in one merge pass.
  void add_scaled(const Scalar& c, const Monomial& mono, const Polynomial& g);
  Polynomial monic() const;
  void drop_lead() { terms_.erase(terms_.begin()); }
  Polynomial pow(int e) const;
  /// Exact division by a monomial dividing every term.
  Polynomial divided_by(const Monomial& mono) const;

  BidegreeResult bidegree() const;
  bool is_bihomogeneous() const { return std::holds_alternative<Bidegree>(bidegree()); }
  /// All terms share the same weighted degree for `weights`.
  bool is_homogeneous(const std::vector<int>& weights) const;
  /// True when no term uses any of `vars`.
  bool avoids(std::span<const int> vars) const;
  bool is_monomial() const { return terms_.size() == 1; }

  /// Same polynomial in a compatible ring (re-sorted under its order), or in a
  /// ring with more auxiliary variables when `target` extends this ring.
  Polynomial in_ring(RingPtr target) const;
  /// Substitute zero for the listed variables.
  Polynomial kill(std::span<const int> vars) const;

  std::string to_string() const;
  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  void check_ring(const Polynomial& o) const;
  void normalize();
  RingPtr ring_;
  std::vector<Term> terms_;
};

/// Sum c_i * x^a_i with a_i the coefficients of a linear form in the
/// listed variables.
Polynomial linear_form(RingPtr ring, std::span<const int> vars, std::span<const Scalar> coeffs);

}  // namespace bireg
