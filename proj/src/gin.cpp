// SPDX-License-Identifier: Apache-2.0
#include "biregkit/gin.hpp"

#include <algorithm>
#include <map>

namespace bireg {

Matrix identity_matrix(int k, const Field& f) {
  Matrix a(static_cast<std::size_t>(k), std::vector<Scalar>(static_cast<std::size_t>(k), Scalar::zero(f)));
  for (int i = 0; i < k; ++i) a[i][i] = Scalar::one(f);
  return a;
}

Scalar determinant(Matrix a) {
  const std::size_t k = a.size();
  if (k == 0) return Scalar(mpq_class(1));
  Scalar det = Scalar::one(a[0][0].field());
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t p = c;
    while (p < k && a[p][c].is_zero()) ++p;
    if (p == k) return Scalar::zero(det.field());
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    Scalar inv = a[c][c].inverse();
    for (std::size_t r = c + 1; r < k; ++r) {
      if (a[r][c].is_zero()) continue;
      Scalar f = a[r][c] * inv;
      for (std::size_t q = c; q < k; ++q) a[r][q] -= f * a[c][q];
    }
  }
  return det;
}

Matrix inverse(Matrix a) {
  const std::size_t k = a.size();
  if (k == 0) return a;
  const Field f = a[0][0].field();
  Matrix inv = identity_matrix(static_cast<int>(k), f);
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t p = c;
    while (p < k && a[p][c].is_zero()) ++p;
    if (p == k) throw MathError("singular matrix");
    std::swap(a[p], a[c]);
    std::swap(inv[p], inv[c]);
    Scalar s = a[c][c].inverse();
    for (std::size_t q = 0; q < k; ++q) {
      a[c][q] *= s;
      inv[c][q] *= s;
    }
    for (std::size_t r = 0; r < k; ++r) {
      if (r == c || a[r][c].is_zero()) continue;
      Scalar m = a[r][c];
      for (std::size_t q = 0; q < k; ++q) {
        a[r][q] -= m * a[c][q];
        inv[r][q] -= m * inv[c][q];
      }
    }
  }
  return inv;
}

CoordinateChange identity_change(const Ring& ring) {
  return {identity_matrix(ring.n(), ring.field()), identity_matrix(ring.m(), ring.field()), 0};
}

namespace {

Matrix random_matrix(int k, const Field& f, std::mt19937_64& rng, long bound) {
  Matrix a(static_cast<std::size_t>(k), std::vector<Scalar>(static_cast<std::size_t>(k)));
  std::uniform_int_distribution<long> box(-bound, bound);
  std::uniform_int_distribution<std::uint64_t> residue(0, f.is_rational() ? 0 : f.characteristic() - 1);
  for (auto& row : a) {
    for (auto& x : row) {
      if (f.is_rational()) {
        x = Scalar::from_int(box(rng), f);
      } else {
        x = Scalar(ModInt{residue(rng), f.characteristic()});
      }
    }
  }
  return a;
}

Matrix random_invertible(int k, const Field& f, std::mt19937_64& rng, long bound) {
  for (int attempt = 0; attempt < 100; ++attempt) {
    Matrix a = random_matrix(k, f, rng, bound);
    if (!determinant(a).is_zero()) return a;
  }
  throw MathError("could not draw an invertible matrix");
}

}  // namespace

CoordinateChange random_change(const Ring& ring, std::uint64_t seed, bool x_block, bool y_block, long bound) {
  std::mt19937_64 rng(seed);
  CoordinateChange g;
  g.seed = seed;
  g.d = x_block ? random_invertible(ring.n(), ring.field(), rng, bound) : identity_matrix(ring.n(), ring.field());
  g.e = y_block ? random_invertible(ring.m(), ring.field(), rng, bound) : identity_matrix(ring.m(), ring.field());
  return g;
}

CoordinateChange invert(const CoordinateChange& g) { return {inverse(g.d), inverse(g.e), g.seed}; }

Polynomial apply_change(const Polynomial& p, const CoordinateChange& g) {
  const RingPtr& ring = p.ring();
  std::vector<Polynomial> images;
  for (int j = 0; j < ring->n(); ++j) {
    std::vector<Term> terms;
    for (int i = 0; i < ring->n(); ++i) terms.push_back({g.d[i][j], Monomial::variable(ring->x(i))});
    images.emplace_back(ring, terms);
  }
  for (int l = 0; l < ring->m(); ++l) {
    std::vector<Term> terms;
    for (int k = 0; k < ring->m(); ++k) terms.push_back({g.e[k][l], Monomial::variable(ring->y(k))});
    images.emplace_back(ring, terms);
  }
  for (int v = ring->n() + ring->m(); v < ring->nvars(); ++v) images.push_back(Polynomial::variable(ring, v));
  std::map<std::pair<int, int>, Polynomial> powers;
  auto power = [&](int v, int e) -> const Polynomial& {
    auto key = std::make_pair(v, e);
    auto it = powers.find(key);
    if (it == powers.end()) it = powers.emplace(key, images[v].pow(e)).first;
    return it->second;
  };
  Polynomial out(ring);
  for (const auto& t : p.terms()) {
    Polynomial m = Polynomial::constant(ring, t.coeff);
    for (int v = 0; v < ring->nvars(); ++v) {
      if (t.mono[v]) m = m * power(v, t.mono[v]);
    }
    out += m;
  }
  return out;
}

Ideal apply_change(const Ideal& j, const CoordinateChange& g) {
  std::vector<Polynomial> gens;
  for (const auto& f : j.generators()) gens.push_back(apply_change(f, g));
  return Ideal(j.ring(), std::move(gens));
}

BiginResult bigin(const Ideal& j, int trials, std::uint64_t seed) {
  if (trials < 1) throw MathError("bigin needs at least one trial");
  const Ring& base = *j.ring();
  RingPtr ordered = base.with_order(TermOrder::bigraded(base.n(), base.m(), base.aux()));
  Ideal jp = j.in_ring(ordered);
  BiginResult res{MonomialIdeal(ordered), {}, false};
  std::vector<std::uint64_t> seeds(static_cast<std::size_t>(trials));
  std::mt19937_64 master(seed);
  for (auto& s : seeds) s = master();
  for (auto s : seeds) {
    auto g = random_change(*ordered, s);
    res.trials.push_back({s, apply_change(jp, g).initial_ideal()});
  }
  std::size_t best = 0;
  std::size_t best_count = 0;
  for (std::size_t a = 0; a < res.trials.size(); ++a) {
    std::size_t c = 0;
    for (const auto& t : res.trials) c += t.ideal == res.trials[a].ideal ? 1 : 0;
    if (c > best_count) {
      best = a;
      best_count = c;
    }
  }
  if (trials >= 2 && best_count == 1) {
    std::vector<std::vector<std::string>> data;
    for (const auto& t : res.trials) data.push_back(t.ideal.strings());
    throw ConsensusError("bigin: all " + std::to_string(trials) + " trials disagree", data);
  }
  res.ideal = res.trials[best].ideal;
  res.agreed = best_count == res.trials.size();
  return res;
}

int max_x_index(const Ring& ring, const Monomial& z) {
  for (int i = ring.n() - 1; i >= 0; --i) {
    if (z[ring.x(i)]) return i;
  }
  return -1;
}

int max_y_index(const Ring& ring, const Monomial& z) {
  for (int j = ring.m() - 1; j >= 0; --j) {
    if (z[ring.y(j)]) return j;
  }
  return -1;
}

namespace {

bool exchange_closed(const MonomialIdeal& j, bool strong) {
  const Ring& r = *j.ring();
  auto check_block = [&](const Monomial& z, int offset, int count) {
    for (int s = count - 1; s >= 0; --s) {
      if (!z[offset + s]) continue;
      for (int i = 0; i < s; ++i) {
        Monomial w = z / Monomial::variable(offset + s) * Monomial::variable(offset + i);
        if (!j.contains(w)) return false;
      }
      if (!strong) break;
    }
    return true;
  };
  for (const auto& z : j.generators()) {
    if (!check_block(z, r.x(0), r.n()) || !check_block(z, r.n(), r.m())) return false;
  }
  return true;
}

}  // namespace

bool is_bistable(const MonomialIdeal& j) { return exchange_closed(j, false); }
bool is_strongly_bistable(const MonomialIdeal& j) { return exchange_closed(j, true); }

MInvariants m_invariants(const MonomialIdeal& j) {
  if (j.is_zero()) throw MathError("m_x, m_y of the zero ideal");
  MInvariants mi;
  for (const auto& z : j.generators()) {
    Bidegree d = j.ring()->bidegree(z);
    mi.mx = std::max(mi.mx, d.x);
    mi.my = std::max(mi.my, d.y);
  }
  return mi;
}

MonomialIdeal restrict_to_ydeg(const MonomialIdeal& j, const std::vector<int>& v) {
  const Ring& r = *j.ring();
  if (static_cast<int>(v.size()) != r.m()) throw MathError("restrict_to_ydeg: v has the wrong length");
  RingPtr sx = Ring::make(r.n(), 0, r.field(), TermOrder::bigraded(r.n(), 0));
  std::vector<Monomial> gens;
  for (const auto& z : j.generators()) {
    bool below = true;
    for (int l = 0; l < r.m(); ++l) below = below && z[r.y(l)] <= v[static_cast<std::size_t>(l)];
    if (!below) continue;
    Monomial u;
    for (int i = 0; i < r.n(); ++i) u[i] = z[r.x(i)];
    gens.push_back(u);
  }
  return MonomialIdeal(sx, std::move(gens));
}

}  // namespace bireg
