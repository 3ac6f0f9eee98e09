// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "biregkit/field.hpp"

namespace bireg {

inline constexpr int kMaxVariables = 16;
using Exponent = std::uint16_t;

/// Dense exponent vector. Variables are laid out x1..xn, y1..ym, then any
/// auxiliary variables used internally for elimination.
struct Monomial {
  std::array<Exponent, kMaxVariables> exp{};

  Exponent operator[](int i) const { return exp[static_cast<std::size_t>(i)]; }
  Exponent& operator[](int i) { return exp[static_cast<std::size_t>(i)]; }

  int degree() const {
    int d = 0;
    for (auto e : exp) d += e;
    return d;
  }
  bool is_one() const { return degree() == 0; }
  bool divides(const Monomial& other) const {
    for (int i = 0; i < kMaxVariables; ++i) {
      if (exp[i] > other.exp[i]) return false;
    }
    return true;
  }
  bool coprime(const Monomial& other) const {
    for (int i = 0; i < kMaxVariables; ++i) {
      if (exp[i] && other.exp[i]) return false;
    }
    return true;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (int i = 0; i < kMaxVariables; ++i) r.exp[i] = static_cast<Exponent>(a.exp[i] + b.exp[i]);
    return r;
  }
  /// Exact quotient; requires b | a.
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (int i = 0; i < kMaxVariables; ++i) r.exp[i] = static_cast<Exponent>(a.exp[i] - b.exp[i]);
    return r;
  }
  friend bool operator==(const Monomial&, const Monomial&) = default;
  /// Lexicographic on raw exponents; only for containers, not a term order.
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

  static Monomial variable(int i, int power = 1) {
    Monomial m;
    m[i] = static_cast<Exponent>(power);
    return m;
  }
};

Monomial lcm(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (auto e : m.exp) h = (h ^ e) * 1099511628211ULL;
    return h;
  }
};

struct Bidegree {
  int x = 0;
  int y = 0;
  friend auto operator<=>(const Bidegree&, const Bidegree&) = default;
  friend Bidegree operator+(Bidegree a, Bidegree b) { return {a.x + b.x, a.y + b.y}; }
  friend Bidegree operator-(Bidegree a, Bidegree b) { return {a.x - b.x, a.y - b.y}; }
  bool nonnegative() const { return x >= 0 && y >= 0; }
  bool leq(Bidegree o) const { return x <= o.x && y <= o.y; }
};

std::string to_string(Bidegree d);

/// Weight rows compared lexicographically (larger wins), then reverse
/// lexicographic tie-break over `priority`, which lists variables from the
/// largest to the smallest.
class TermOrder {
 public:
  enum class Kind { kBigraded, kRevLexX, kRevLexY, kCustom };

  /// (|u|+|v|, |v|, |u|) lexicographically, then revlex induced by
  /// y1 > ... > ym > x1 > ... > xn.
  static TermOrder bigraded(int n, int m, int aux = 0);
  /// Total degree, then revlex with y1 > ... > ym > x1 > ... > xn (x_n smallest).
  static TermOrder revlex_x(int n, int m, int aux = 0);
  /// Total degree, then revlex with x1 > ... > xn > y1 > ... > ym (y_m smallest).
  static TermOrder revlex_y(int n, int m, int aux = 0);
  static TermOrder custom(std::vector<std::vector<int>> weights, std::vector<int> priority);

  /// -1, 0, 1 as a < b, a == b, a > b.
  int compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  Kind kind() const { return kind_; }
  const std::vector<std::vector<int>>& weights() const { return weights_; }
  const std::vector<int>& priority() const { return priority_; }
  /// The variable compared first by the revlex tie-break.
  int smallest_variable() const { return priority_.back(); }
  /// Copy with extra weight rows in front.
  TermOrder with_leading_rows(std::vector<std::vector<int>> rows) const;
  std::string name() const;
  /// All weights nonnegative and every variable gets positive weight in some row.
  bool is_well_order(int nvars) const;

  friend bool operator==(const TermOrder&, const TermOrder&) = default;

 private:
  Kind kind_ = Kind::kCustom;
  std::vector<std::vector<int>> weights_;
  std::vector<int> priority_;
};

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

struct RingSignature {
  int n = 0;
  int m = 0;
  Field field = Field::rationals();
};

/// S = K[x1..xn, y1..ym] (+ auxiliary variables) with an active term order.
class Ring {
 public:
  static RingPtr make(int n, int m, Field field = Field::rationals());
  static RingPtr make(int n, int m, Field field, TermOrder order, int aux = 0);

  int n() const { return n_; }
  int m() const { return m_; }
  int aux() const { return aux_; }
  int nvars() const { return n_ + m_ + aux_; }
  const Field& field() const { return field_; }
  const TermOrder& order() const { return order_; }
  RingSignature signature() const { return {n_, m_, field_}; }

  int x(int i) const { return i; }       // 0-based x_{i+1}
  int y(int j) const { return n_ + j; }  // 0-based y_{j+1}
  int t(int k) const { return n_ + m_ + k; }
  bool is_x(int var) const { return var < n_; }
  bool is_y(int var) const { return var >= n_ && var < n_ + m_; }

  Bidegree bidegree(const Monomial& mono) const;
  std::string variable_name(int var) const;
  std::string monomial_string(const Monomial& mono) const;

  RingPtr with_order(TermOrder order) const;
  RingPtr with_aux(int aux, TermOrder order) const;
  RingPtr with_field(Field field) const;

  /// Same variables and field; term orders may differ.
  bool compatible(const Ring& other) const {
    return n_ == other.n_ && m_ == other.m_ && aux_ == other.aux_ && field_ == other.field_;
  }
  bool operator==(const Ring& other) const { return compatible(other) && order_ == other.order_; }

  Scalar zero() const { return Scalar::zero(field_); }
  Scalar one() const { return Scalar::one(field_); }
  Scalar scalar(long v) const { return Scalar::from_int(v, field_); }

 private:
  Ring(int n, int m, int aux, Field field, TermOrder order);
  int n_, m_, aux_;
  Field field_;
  TermOrder order_;
};

/// All monomials of bidegree (a, b) in the x and y variables.
std::vector<Monomial> monomials_of_bidegree(const Ring& ring, Bidegree d);
/// All monomials of total degree d in the listed variables.
std::vector<Monomial> monomials_of_degree(std::span<const int> vars, int d);

}  // namespace bireg
