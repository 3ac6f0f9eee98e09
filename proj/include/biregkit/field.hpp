// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace bireg {

class MathError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Coefficient field: the rationals, or Z/p for a prime p < 2^62.
class Field {
 public:
  static Field rationals() { return Field(0); }
  static Field prime(std::uint64_t p);
  /// Accepts "Q" or "Fp:<p>".
  static Field parse(std::string_view text);

  bool is_rational() const { return p_ == 0; }
  std::uint64_t characteristic() const { return p_; }
  std::string to_string() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  friend class Scalar;
  explicit Field(std::uint64_t p) : p_(p) {}
  std::uint64_t p_;
};

/// 2^31 - 1, the default fast-mode prime.
inline constexpr std::uint64_t kDefaultPrime = 2147483647ULL;

bool is_prime(std::uint64_t p);

struct ModInt {
  std::uint64_t value = 0;
  std::uint64_t modulus = 0;
};

/// An element of a Field. Mixing elements of different fields throws.
class Scalar {
 public:
  Scalar() : rep_(mpq_class(0)) {}
  explicit Scalar(mpq_class q) : rep_(std::move(q)) { std::get<mpq_class>(rep_).canonicalize(); }
  explicit Scalar(ModInt z) : rep_(z) {}

  static Scalar zero(const Field& f) { return from_int(0, f); }
  static Scalar one(const Field& f) { return from_int(1, f); }
  static Scalar from_int(long v, const Field& f);
  static Scalar from_rational(const mpq_class& q, const Field& f);

  Field field() const;
  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const { return std::holds_alternative<mpq_class>(rep_); }
  const mpq_class& rational() const { return std::get<mpq_class>(rep_); }
  std::uint64_t residue() const { return std::get<ModInt>(rep_).value; }

  Scalar operator-() const;
  Scalar inverse() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);

  /// Integer or a/b for Q, the residue in [0, p) for Fp.
  std::string to_string() const;
  /// Sign of a rational (residues are treated as positive unless zero).
  int sign() const;

 private:
  std::variant<mpq_class, ModInt> rep_;
};

}  // namespace bireg
