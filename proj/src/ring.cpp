// SPDX-License-Identifier: Apache-2.0
#include "biregkit/ring.hpp"

#include <algorithm>
#include <numeric>
#include <span>

namespace bireg {

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (int i = 0; i < kMaxVariables; ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (int i = 0; i < kMaxVariables; ++i) r[i] = std::min(a[i], b[i]);
  return r;
}

std::string to_string(Bidegree d) { return "(" + std::to_string(d.x) + "," + std::to_string(d.y) + ")"; }

namespace {

std::vector<int> ones(int nvars, int from, int to) {
  std::vector<int> w(static_cast<std::size_t>(nvars), 0);
  for (int i = from; i < to; ++i) w[static_cast<std::size_t>(i)] = 1;
  return w;
}

// Aux variables first, so the revlex tie-break looks at them last.
std::vector<int> priority_y_then_x(int n, int m, int aux) {
  std::vector<int> p;
  for (int k = 0; k < aux; ++k) p.push_back(n + m + k);
  for (int j = 0; j < m; ++j) p.push_back(n + j);
  for (int i = 0; i < n; ++i) p.push_back(i);
  return p;
}

std::vector<int> priority_x_then_y(int n, int m, int aux) {
  std::vector<int> p;
  for (int k = 0; k < aux; ++k) p.push_back(n + m + k);
  for (int i = 0; i < n; ++i) p.push_back(i);
  for (int j = 0; j < m; ++j) p.push_back(n + j);
  return p;
}

}  // namespace

TermOrder TermOrder::bigraded(int n, int m, int aux) {
  TermOrder o;
  o.kind_ = Kind::kBigraded;
  const int N = n + m + aux;
  o.weights_ = {ones(N, 0, n + m), ones(N, n, n + m)};
  o.priority_ = priority_y_then_x(n, m, aux);
  return o;
}

TermOrder TermOrder::revlex_x(int n, int m, int aux) {
  TermOrder o;
  o.kind_ = Kind::kRevLexX;
  o.weights_ = {ones(n + m + aux, 0, n + m)};
  o.priority_ = priority_y_then_x(n, m, aux);
  return o;
}

TermOrder TermOrder::revlex_y(int n, int m, int aux) {
  TermOrder o;
  o.kind_ = Kind::kRevLexY;
  o.weights_ = {ones(n + m + aux, 0, n + m)};
  o.priority_ = priority_x_then_y(n, m, aux);
  return o;
}

TermOrder TermOrder::custom(std::vector<std::vector<int>> weights, std::vector<int> priority) {
  TermOrder o;
  o.kind_ = Kind::kCustom;
  o.weights_ = std::move(weights);
  o.priority_ = std::move(priority);
  return o;
}

int TermOrder::compare(const Monomial& a, const Monomial& b) const {
  for (const auto& row : weights_) {
    long wa = 0;
    long wb = 0;
    for (std::size_t i = 0; i < row.size(); ++i) {
      wa += static_cast<long>(row[i]) * a.exp[i];
      wb += static_cast<long>(row[i]) * b.exp[i];
    }
    if (wa != wb) return wa > wb ? 1 : -1;
  }
  for (auto it = priority_.rbegin(); it != priority_.rend(); ++it) {
    const auto ea = a.exp[static_cast<std::size_t>(*it)];
    const auto eb = b.exp[static_cast<std::size_t>(*it)];
    if (ea != eb) return ea < eb ? 1 : -1;
  }
  return 0;
}

TermOrder TermOrder::with_leading_rows(std::vector<std::vector<int>> rows) const {
  TermOrder o = *this;
  o.kind_ = Kind::kCustom;
  rows.insert(rows.end(), weights_.begin(), weights_.end());
  o.weights_ = std::move(rows);
  return o;
}

std::string TermOrder::name() const {
  switch (kind_) {
    case Kind::kBigraded:
      return "bigraded";
    case Kind::kRevLexX:
      return "revlex-x";
    case Kind::kRevLexY:
      return "revlex-y";
    case Kind::kCustom:
      return "custom";
  }
  return "custom";
}

bool TermOrder::is_well_order(int nvars) const {
  std::vector<bool> covered(static_cast<std::size_t>(nvars), false);
  for (const auto& row : weights_) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (row[i] < 0) return false;
      if (row[i] > 0 && i < covered.size()) covered[i] = true;
    }
  }
  if (static_cast<int>(priority_.size()) != nvars) return false;
  return std::all_of(covered.begin(), covered.end(), [](bool b) { return b; });
}

Ring::Ring(int n, int m, int aux, Field field, TermOrder order)
    : n_(n), m_(m), aux_(aux), field_(field), order_(std::move(order)) {}

RingPtr Ring::make(int n, int m, Field field) { return make(n, m, field, TermOrder::bigraded(n, m)); }

RingPtr Ring::make(int n, int m, Field field, TermOrder order, int aux) {
  if (n < 0 || m < 0 || aux < 0 || n + m < 1) throw MathError("ring needs n, m >= 0 and n + m >= 1");
  if (n + m + aux > kMaxVariables) throw MathError("too many variables (limit " + std::to_string(kMaxVariables) + ")");
  if (!order.is_well_order(n + m + aux)) throw MathError("term order is not a well order on this ring");
  return RingPtr(new Ring(n, m, aux, field, std::move(order)));
}

Bidegree Ring::bidegree(const Monomial& mono) const {
  Bidegree d;
  for (int i = 0; i < n_; ++i) d.x += mono[i];
  for (int j = 0; j < m_; ++j) d.y += mono[n_ + j];
  return d;
}

std::string Ring::variable_name(int var) const {
  if (var < n_) return "x" + std::to_string(var + 1);
  if (var < n_ + m_) return "y" + std::to_string(var - n_ + 1);
  return "t" + std::to_string(var - n_ - m_ + 1);
}

std::string Ring::monomial_string(const Monomial& mono) const {
  std::string s;
  for (int v = 0; v < nvars(); ++v) {
    if (mono[v] == 0) continue;
    if (!s.empty()) s += "*";
    s += variable_name(v);
    if (mono[v] > 1) s += "^" + std::to_string(mono[v]);
  }
  return s.empty() ? "1" : s;
}

RingPtr Ring::with_order(TermOrder order) const { return make(n_, m_, field_, std::move(order), aux_); }

RingPtr Ring::with_aux(int aux, TermOrder order) const { return make(n_, m_, field_, std::move(order), aux); }

RingPtr Ring::with_field(Field field) const { return make(n_, m_, field, order_, aux_); }

namespace {

void enumerate(std::span<const int> vars, std::size_t pos, int remaining, Monomial& cur, std::vector<Monomial>& out) {
  if (pos + 1 == vars.size()) {
    cur[vars[pos]] = static_cast<Exponent>(remaining);
    out.push_back(cur);
    cur[vars[pos]] = 0;
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    cur[vars[pos]] = static_cast<Exponent>(e);
    enumerate(vars, pos + 1, remaining - e, cur, out);
  }
  cur[vars[pos]] = 0;
}

}  // namespace

std::vector<Monomial> monomials_of_degree(std::span<const int> vars, int d) {
  std::vector<Monomial> out;
  if (d < 0) return out;
  if (vars.empty()) {
    if (d == 0) out.emplace_back();
    return out;
  }
  Monomial cur;
  enumerate(vars, 0, d, cur, out);
  return out;
}

std::vector<Monomial> monomials_of_bidegree(const Ring& ring, Bidegree d) {
  std::vector<int> xs(static_cast<std::size_t>(ring.n()));
  std::iota(xs.begin(), xs.end(), 0);
  std::vector<int> ys(static_cast<std::size_t>(ring.m()));
  std::iota(ys.begin(), ys.end(), ring.n());
  auto xpart = monomials_of_degree(xs, d.x);
  auto ypart = monomials_of_degree(ys, d.y);
  std::vector<Monomial> out;
  out.reserve(xpart.size() * ypart.size());
  for (const auto& a : xpart) {
    for (const auto& b : ypart) out.push_back(a * b);
  }
  return out;
}

}  // namespace bireg
