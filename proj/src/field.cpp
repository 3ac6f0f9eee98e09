// SPDX-License-Identifier: Apache-2.0
#include "biregkit/field.hpp"

#include <charconv>

namespace bireg {

namespace {

using u128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<u128>(a) * b) % p);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mul_mod(r, a, p);
    a = mul_mod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t reduce_mpz(const mpz_class& z, std::uint64_t p) {
  return mpz_fdiv_ui(z.get_mpz_t(), static_cast<unsigned long>(p));
}

void check_same(const ModInt& a, const ModInt& b) {
  if (a.modulus != b.modulus) throw MathError("scalar field mismatch");
}

}  // namespace

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (p % q == 0) return p == q;
  }
  std::uint64_t d = p - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Deterministic Miller-Rabin bases for 64-bit inputs.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = pow_mod(a, d, p);
    if (x == 1 || x == p - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, p);
      if (x == p - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Field Field::prime(std::uint64_t p) {
  if (p >= (1ULL << 62) || !is_prime(p)) throw MathError("Fp requires a prime below 2^62, got " + std::to_string(p));
  return Field(p);
}

Field Field::parse(std::string_view text) {
  if (text == "Q") return rationals();
  if (text.substr(0, 3) == "Fp:") {
    std::uint64_t p = 0;
    auto digits = text.substr(3);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec != std::errc() || ptr != digits.data() + digits.size()) {
      throw MathError("bad field '" + std::string(text) + "'");
    }
    return prime(p);
  }
  throw MathError("bad field '" + std::string(text) + "', expected Q or Fp:<p>");
}

std::string Field::to_string() const { return is_rational() ? "Q" : "Fp:" + std::to_string(p_); }

Scalar Scalar::from_int(long v, const Field& f) {
  if (f.is_rational()) return Scalar(mpq_class(v));
  const std::uint64_t p = f.characteristic();
  long r = v % static_cast<long>(p);
  if (r < 0) r += static_cast<long>(p);
  return Scalar(ModInt{static_cast<std::uint64_t>(r), p});
}

Scalar Scalar::from_rational(const mpq_class& q, const Field& f) {
  if (f.is_rational()) return Scalar(q);
  const std::uint64_t p = f.characteristic();
  const std::uint64_t den = reduce_mpz(q.get_den(), p);
  if (den == 0) throw MathError("denominator vanishes in " + f.to_string());
  const std::uint64_t num = reduce_mpz(q.get_num(), p);
  return Scalar(ModInt{mul_mod(num, pow_mod(den, p - 2, p), p), p});
}

Field Scalar::field() const {
  if (is_rational()) return Field::rationals();
  return Field(std::get<ModInt>(rep_).modulus);
}

bool Scalar::is_zero() const {
  if (auto q = std::get_if<mpq_class>(&rep_)) return sgn(*q) == 0;
  return std::get<ModInt>(rep_).value == 0;
}

bool Scalar::is_one() const {
  if (auto q = std::get_if<mpq_class>(&rep_)) return *q == 1;
  return std::get<ModInt>(rep_).value == 1;
}

int Scalar::sign() const {
  if (auto q = std::get_if<mpq_class>(&rep_)) return sgn(*q);
  return std::get<ModInt>(rep_).value == 0 ? 0 : 1;
}

Scalar Scalar::operator-() const {
  if (auto q = std::get_if<mpq_class>(&rep_)) return Scalar(mpq_class(-*q));
  const auto& z = std::get<ModInt>(rep_);
  return Scalar(ModInt{z.value == 0 ? 0 : z.modulus - z.value, z.modulus});
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw MathError("division by zero");
  if (auto q = std::get_if<mpq_class>(&rep_)) return Scalar(mpq_class(1 / *q));
  const auto& z = std::get<ModInt>(rep_);
  return Scalar(ModInt{pow_mod(z.value, z.modulus - 2, z.modulus), z.modulus});
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (is_rational() != o.is_rational()) throw MathError("scalar field mismatch");
  if (auto q = std::get_if<mpq_class>(&rep_)) {
    *q += std::get<mpq_class>(o.rep_);
  } else {
    auto& a = std::get<ModInt>(rep_);
    const auto& b = std::get<ModInt>(o.rep_);
    check_same(a, b);
    a.value += b.value;
    if (a.value >= a.modulus) a.value -= a.modulus;
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  if (is_rational() != o.is_rational()) throw MathError("scalar field mismatch");
  if (auto q = std::get_if<mpq_class>(&rep_)) {
    *q -= std::get<mpq_class>(o.rep_);
  } else {
    auto& a = std::get<ModInt>(rep_);
    const auto& b = std::get<ModInt>(o.rep_);
    check_same(a, b);
    a.value = a.value >= b.value ? a.value - b.value : a.value + a.modulus - b.value;
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (is_rational() != o.is_rational()) throw MathError("scalar field mismatch");
  if (auto q = std::get_if<mpq_class>(&rep_)) {
    *q *= std::get<mpq_class>(o.rep_);
  } else {
    auto& a = std::get<ModInt>(rep_);
    const auto& b = std::get<ModInt>(o.rep_);
    check_same(a, b);
    a.value = mul_mod(a.value, b.value, a.modulus);
  }
  return *this;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.is_rational() != b.is_rational()) return false;
  if (a.is_rational()) return a.rational() == b.rational();
  const auto& x = std::get<ModInt>(a.rep_);
  const auto& y = std::get<ModInt>(b.rep_);
  return x.modulus == y.modulus && x.value == y.value;
}

std::string Scalar::to_string() const {
  if (auto q = std::get_if<mpq_class>(&rep_)) return q->get_str();
  return std::to_string(std::get<ModInt>(rep_).value);
}

}  // namespace bireg
