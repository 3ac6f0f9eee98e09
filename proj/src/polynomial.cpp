// SPDX-License-Identifier: Apache-2.0
#include "biregkit/polynomial.hpp"

#include <algorithm>

namespace bireg {

Polynomial::Polynomial(RingPtr ring, std::vector<Term> terms) : ring_(std::move(ring)), terms_(std::move(terms)) {
  normalize();
}

void Polynomial::normalize() {
  const auto& ord = ring_->order();
  std::sort(terms_.begin(), terms_.end(), [&](const Term& a, const Term& b) { return ord.greater(a.mono, b.mono); });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff += t.coeff;
    } else {
      if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
  terms_ = std::move(out);
}

Polynomial Polynomial::constant(RingPtr ring, const Scalar& c) { return term(std::move(ring), c, Monomial{}); }

Polynomial Polynomial::term(RingPtr ring, const Scalar& c, const Monomial& mono) {
  Polynomial p(std::move(ring));
  if (!c.is_zero()) p.terms_.push_back({c, mono});
  return p;
}

Polynomial Polynomial::variable(RingPtr ring, int var) {
  auto one = ring->one();
  return term(std::move(ring), one, Monomial::variable(var));
}

Polynomial Polynomial::from_sorted(RingPtr ring, std::vector<Term> terms) {
  Polynomial p(std::move(ring));
  p.terms_ = std::move(terms);
  return p;
}

void Polynomial::check_ring(const Polynomial& o) const {
  if (ring_ != o.ring_ && !(*ring_ == *o.ring_)) throw MathError("polynomial ring mismatch");
}

Polynomial Polynomial::operator-() const {
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({-t.coeff, t.mono});
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  add_scaled(ring_->one(), Monomial{}, o);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  add_scaled(-ring_->one(), Monomial{}, o);
  return *this;
}

void Polynomial::add_scaled(const Scalar& c, const Monomial& mono, const Polynomial& g) {
  check_ring(g);
  if (c.is_zero() || g.is_zero()) return;
  const auto& ord = ring_->order();
  const bool unit = c.is_one();
  std::vector<Term> out;
  out.reserve(terms_.size() + g.terms_.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < terms_.size() || j < g.terms_.size()) {
    if (j == g.terms_.size()) {
      out.push_back(std::move(terms_[i++]));
      continue;
    }
    Monomial gm = g.terms_[j].mono * mono;
    int cmp = i == terms_.size() ? -1 : ord.compare(terms_[i].mono, gm);
    if (cmp > 0) {
      out.push_back(std::move(terms_[i++]));
    } else if (cmp < 0) {
      out.push_back({unit ? g.terms_[j].coeff : c * g.terms_[j].coeff, gm});
      ++j;
    } else {
      Scalar s = std::move(terms_[i].coeff);
      if (unit) {
        s += g.terms_[j].coeff;
      } else {
        s += c * g.terms_[j].coeff;
      }
      if (!s.is_zero()) out.push_back({std::move(s), gm});
      ++i;
      ++j;
    }
  }
  terms_ = std::move(out);
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_ring(b);
  Polynomial r(a.ring_);
  if (a.size() < b.size()) {
    for (const auto& t : a.terms_) r.add_scaled(t.coeff, t.mono, b);
  } else {
    for (const auto& t : b.terms_) r.add_scaled(t.coeff, t.mono, a);
  }
  return r;
}

Polynomial Polynomial::scaled(const Scalar& c) const { return times_term(c, Monomial{}); }

Polynomial Polynomial::times_term(const Scalar& c, const Monomial& mono) const {
  Polynomial r(ring_);
  if (c.is_zero()) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.coeff * c, t.mono * mono});
  return r;
}

Polynomial Polynomial::monic() const {
  if (is_zero() || lead_coeff().is_one()) return *this;
  return scaled(lead_coeff().inverse());
}

Polynomial Polynomial::pow(int e) const {
  Polynomial r = constant(ring_, ring_->one());
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1) r = r * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return r;
}

Polynomial Polynomial::divided_by(const Monomial& mono) const {
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    if (!mono.divides(t.mono)) throw MathError("monomial does not divide polynomial");
    r.terms_.push_back({t.coeff, t.mono / mono});
  }
  return r;
}

BidegreeResult Polynomial::bidegree() const {
  if (is_zero()) return ZeroPolynomial{};
  Bidegree d = ring_->bidegree(terms_.front().mono);
  for (const auto& t : terms_) {
    if (ring_->bidegree(t.mono) != d) return NotBihomogeneous{};
  }
  return d;
}

bool Polynomial::is_homogeneous(const std::vector<int>& weights) const {
  auto wdeg = [&](const Monomial& mono) {
    long s = 0;
    for (std::size_t i = 0; i < weights.size(); ++i) s += static_cast<long>(weights[i]) * mono.exp[i];
    return s;
  };
  for (const auto& t : terms_) {
    if (wdeg(t.mono) != wdeg(terms_.front().mono)) return false;
  }
  return true;
}

bool Polynomial::avoids(std::span<const int> vars) const {
  for (const auto& t : terms_) {
    for (int v : vars) {
      if (t.mono[v] != 0) return false;
    }
  }
  return true;
}

Polynomial Polynomial::in_ring(RingPtr target) const {
  if (target == ring_) return *this;
  if (target->n() != ring_->n() || target->m() != ring_->m() || !(target->field() == ring_->field())) {
    throw MathError("in_ring: incompatible target ring");
  }
  const int top = target->nvars();
  for (const auto& t : terms_) {
    for (int v = top; v < kMaxVariables; ++v) {
      if (t.mono[v] != 0) throw MathError("in_ring: polynomial uses variables missing from the target");
    }
  }
  Polynomial r(std::move(target), terms_);
  return r;
}

Polynomial Polynomial::kill(std::span<const int> vars) const {
  Polynomial r(ring_);
  for (const auto& t : terms_) {
    bool keep = true;
    for (int v : vars) keep = keep && t.mono[v] == 0;
    if (keep) r.terms_.push_back(t);
  }
  return r;
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& t : terms_) {
    const int sg = t.coeff.sign();
    Scalar mag = (t.coeff.is_rational() && sg < 0) ? -t.coeff : t.coeff;
    if (first) {
      if (sg < 0 && t.coeff.is_rational()) s += "-";
    } else {
      s += (sg < 0 && t.coeff.is_rational()) ? " - " : " + ";
    }
    first = false;
    const bool one = t.mono.is_one();
    if (mag.is_one() && !one) {
      s += ring_->monomial_string(t.mono);
    } else if (one) {
      s += mag.to_string();
    } else {
      s += mag.to_string() + "*" + ring_->monomial_string(t.mono);
    }
  }
  return s;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (!a.ring_->compatible(*b.ring_)) return false;
  if (a.terms_.size() != b.terms_.size()) return false;
  if (a.ring_->order() == b.ring_->order()) {
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
      if (a.terms_[i].mono != b.terms_[i].mono || !(a.terms_[i].coeff == b.terms_[i].coeff)) return false;
    }
    return true;
  }
  return a == b.in_ring(a.ring_);
}

Polynomial linear_form(RingPtr ring, std::span<const int> vars, std::span<const Scalar> coeffs) {
  std::vector<Term> terms;
  for (std::size_t k = 0; k < vars.size(); ++k) terms.push_back({coeffs[k], Monomial::variable(vars[k])});
  return Polynomial(std::move(ring), std::move(terms));
}

}  // namespace bireg
