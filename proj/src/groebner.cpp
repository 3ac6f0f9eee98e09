// SPDX-License-Identifier: Apache-2.0
#include "biregkit/groebner.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "biregkit/linalg.hpp"

namespace bireg {

namespace {

std::uint32_t support_mask(const Monomial& z) {
  std::uint32_t m = 0;
  for (int i = 0; i < kMaxVariables; ++i) {
    if (z[i]) m |= 1U << i;
  }
  return m;
}

struct Reducers {
  std::vector<const Polynomial*> polys;
  std::vector<std::uint32_t> masks;

  void add(const Polynomial* p) {
    polys.push_back(p);
    masks.push_back(support_mask(p->lead_monomial()));
  }
  const Polynomial* find(const Monomial& t) const {
    const std::uint32_t tm = support_mask(t);
    for (std::size_t k = 0; k < polys.size(); ++k) {
      if ((masks[k] & ~tm) == 0 && polys[k]->lead_monomial().divides(t)) return polys[k];
    }
    return nullptr;
  }
  int find_index(const Monomial& t) const {
    const std::uint32_t tm = support_mask(t);
    for (std::size_t k = 0; k < polys.size(); ++k) {
      if ((masks[k] & ~tm) == 0 && polys[k]->lead_monomial().divides(t)) return static_cast<int>(k);
    }
    return -1;
  }
};

Polynomial reduce(Polynomial p, const Reducers& red) {
  std::vector<Term> rem;
  RingPtr ring = p.ring();
  while (!p.is_zero()) {
    const Polynomial* g = red.find(p.lead_monomial());
    if (g) {
      Scalar c = -p.lead_coeff();
      Monomial q = p.lead_monomial() / g->lead_monomial();
      p.add_scaled(c, q, *g);
    } else {
      rem.push_back(p.terms().front());
      p.drop_lead();
    }
  }
  return Polynomial::from_sorted(ring, std::move(rem));
}

struct Pair {
  int i;
  int j;
  Monomial lcm;
};

}  // namespace

Polynomial normal_form(Polynomial p, const std::vector<Polynomial>& gb) {
  Reducers red;
  for (const auto& g : gb) red.add(&g);
  return reduce(std::move(p), red);
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  Monomial l = lcm(f.lead_monomial(), g.lead_monomial());
  Polynomial s = f.times_term(f.lead_coeff().inverse(), l / f.lead_monomial());
  s.add_scaled(-g.lead_coeff().inverse(), l / g.lead_monomial(), g);
  return s;
}

std::vector<Polynomial> groebner_basis(const RingPtr& ring, std::vector<Polynomial> gens) {
  std::vector<Polynomial> input;
  for (auto& g : gens) {
    if (!g.is_zero()) input.push_back(g.in_ring(ring).monic());
  }
  const auto& ord = ring->order();
  std::sort(input.begin(), input.end(),
            [&](const Polynomial& a, const Polynomial& b) { return ord.greater(b.lead_monomial(), a.lead_monomial()); });

  std::vector<Polynomial> basis;
  basis.reserve(64);
  std::vector<bool> active;
  std::vector<Pair> pairs;
  bool unit = false;

  auto active_reducers = [&]() {
    Reducers red;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (active[k]) red.add(&basis[k]);
    }
    return red;
  };

  auto update = [&](Polynomial h) {
    if (h.lead_monomial().is_one()) {
      unit = true;
      return;
    }
    const Monomial& lh = h.lead_monomial();
    const int hk = static_cast<int>(basis.size());
    std::vector<int> cands;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (active[k]) cands.push_back(static_cast<int>(k));
    }
    std::vector<int> kept;
    for (std::size_t a = 0; a < cands.size(); ++a) {
      const Monomial& la = basis[cands[a]].lead_monomial();
      Monomial l1 = lcm(lh, la);
      bool keep = lh.coprime(la);
      if (!keep) {
        keep = true;
        for (std::size_t b = a + 1; b < cands.size() && keep; ++b) {
          if (lcm(lh, basis[cands[b]].lead_monomial()).divides(l1)) keep = false;
        }
        for (int b : kept) {
          if (!keep) break;
          if (lcm(lh, basis[b].lead_monomial()).divides(l1)) keep = false;
        }
      }
      if (keep) kept.push_back(cands[a]);
    }
    std::vector<Pair> filtered;
    filtered.reserve(pairs.size());
    for (auto& p : pairs) {
      if (lh.divides(p.lcm) && lcm(basis[p.i].lead_monomial(), lh) != p.lcm &&
          lcm(basis[p.j].lead_monomial(), lh) != p.lcm) {
        continue;
      }
      filtered.push_back(std::move(p));
    }
    pairs = std::move(filtered);
    for (int g : kept) {
      const Monomial& lg = basis[g].lead_monomial();
      if (!lh.coprime(lg)) pairs.push_back({g, hk, lcm(lh, lg)});
    }
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (active[k] && lh.divides(basis[k].lead_monomial())) active[k] = false;
    }
    basis.push_back(std::move(h));
    active.push_back(true);
  };

  for (auto& f : input) {
    Polynomial h = reduce(std::move(f), active_reducers());
    if (!h.is_zero()) update(h.monic());
    if (unit) break;
  }
  while (!pairs.empty() && !unit) {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs.size(); ++k) {
      if (ord.greater(pairs[best].lcm, pairs[k].lcm)) best = k;
    }
    Pair p = pairs[best];
    pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(best));
    Polynomial h = reduce(s_polynomial(basis[p.i], basis[p.j]), active_reducers());
    if (!h.is_zero()) update(h.monic());
  }
  if (unit) return {Polynomial::constant(ring, ring->one())};

  std::vector<Polynomial> result;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (active[k]) result.push_back(basis[k]);
  }
  for (std::size_t k = 0; k < result.size(); ++k) {
    Reducers others;
    for (std::size_t l = 0; l < result.size(); ++l) {
      if (l != k) others.add(&result[l]);
    }
    Polynomial tail = result[k];
    Term lead = tail.terms().front();
    tail.drop_lead();
    Polynomial reduced = reduce(std::move(tail), others);
    std::vector<Term> terms{lead};
    terms.insert(terms.end(), reduced.terms().begin(), reduced.terms().end());
    result[k] = Polynomial::from_sorted(ring, std::move(terms));
  }
  std::sort(result.begin(), result.end(),
            [&](const Polynomial& a, const Polynomial& b) { return ord.greater(b.lead_monomial(), a.lead_monomial()); });
  return result;
}

bool is_groebner_basis(const std::vector<Polynomial>& gb) {
  Reducers red;
  for (const auto& g : gb) red.add(&g);
  for (std::size_t i = 0; i < gb.size(); ++i) {
    for (std::size_t j = i + 1; j < gb.size(); ++j) {
      if (!reduce(s_polynomial(gb[i], gb[j]), red).is_zero()) return false;
    }
  }
  return true;
}

std::optional<Polynomial> divide_exact(const Polynomial& p, const Polynomial& f) {
  if (f.is_zero()) throw MathError("division by the zero polynomial");
  Polynomial r = p;
  Polynomial q(p.ring());
  const Scalar inv = f.lead_coeff().inverse();
  while (!r.is_zero()) {
    if (!f.lead_monomial().divides(r.lead_monomial())) return std::nullopt;
    Scalar c = r.lead_coeff() * inv;
    Monomial m = r.lead_monomial() / f.lead_monomial();
    q.add_scaled(c, m, Polynomial::constant(p.ring(), p.ring()->one()));
    r.add_scaled(-c, m, f);
  }
  return q;
}

Ideal::Ideal(RingPtr ring) : ring_(std::move(ring)) {}

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> gens) : ring_(std::move(ring)) {
  for (auto& g : gens) {
    if (!g.is_zero()) gens_.push_back(g.in_ring(ring_));
  }
}

Ideal Ideal::from_monomials(const MonomialIdeal& mono) {
  std::vector<Polynomial> gens;
  for (const auto& g : mono.generators()) gens.push_back(Polynomial::term(mono.ring(), mono.ring()->one(), g));
  Ideal j(mono.ring(), gens);
  j.gb_ = std::make_shared<std::vector<Polynomial>>(groebner_basis(mono.ring(), gens));
  return j;
}

const std::vector<Polynomial>& Ideal::groebner() const {
  if (!gb_) gb_ = std::make_shared<std::vector<Polynomial>>(groebner_basis(ring_, gens_));
  return *gb_;
}

MonomialIdeal Ideal::initial_ideal() const {
  std::vector<Monomial> leads;
  for (const auto& g : groebner()) leads.push_back(g.lead_monomial());
  return MonomialIdeal(ring_, std::move(leads));
}

bool Ideal::is_unit() const {
  const auto& gb = groebner();
  return gb.size() == 1 && gb.front().lead_monomial().is_one();
}

bool Ideal::is_bihomogeneous() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const Polynomial& g) { return g.is_bihomogeneous(); });
}

bool Ideal::is_monomial() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const Polynomial& g) { return g.is_monomial(); });
}

bool Ideal::contains(const Ideal& other) const {
  return std::all_of(other.gens_.begin(), other.gens_.end(), [&](const Polynomial& g) { return contains(g); });
}

Ideal Ideal::with_order(TermOrder order) const { return in_ring(ring_->with_order(std::move(order))); }

Ideal Ideal::in_ring(RingPtr target) const {
  std::vector<Polynomial> gens;
  for (const auto& g : gens_) gens.push_back(g.in_ring(target));
  return Ideal(std::move(target), std::move(gens));
}

std::vector<std::string> Ideal::strings() const {
  std::vector<std::string> out;
  for (const auto& g : gens_) out.push_back(g.to_string());
  return out;
}

Ideal operator+(const Ideal& a, const Ideal& b) {
  auto gens = a.generators();
  for (const auto& g : b.generators()) gens.push_back(g.in_ring(a.ring()));
  return Ideal(a.ring(), std::move(gens));
}

Ideal operator*(const Ideal& a, const Ideal& b) {
  std::vector<Polynomial> gens;
  for (const auto& f : a.generators())
    for (const auto& g : b.generators()) gens.push_back(f * g.in_ring(a.ring()));
  return Ideal(a.ring(), std::move(gens));
}

namespace {

std::vector<int> total_degree_row(int nvars) { return std::vector<int>(static_cast<std::size_t>(nvars), 1); }

RingPtr with_one_more_aux(const RingPtr& ring) {
  const int t = ring->nvars();
  auto priority = ring->order().priority();
  priority.insert(priority.begin(), t);
  std::vector<std::vector<int>> rows = ring->order().weights();
  rows.push_back(std::vector<int>(static_cast<std::size_t>(t + 1), 0));
  rows.back()[static_cast<std::size_t>(t)] = 1;
  return ring->with_aux(ring->aux() + 1, TermOrder::custom(std::move(rows), std::move(priority)));
}

}  // namespace

std::vector<Polynomial> eliminate_variables(const RingPtr& ring, const std::vector<Polynomial>& gens,
                                            const std::vector<int>& drop,
                                            const std::optional<std::vector<int>>& grading) {
  const int nv = ring->nvars();
  std::vector<int> block(static_cast<std::size_t>(nv), 0);
  for (int v : drop) block[static_cast<std::size_t>(v)] = 1;
  std::vector<std::vector<int>> rows;
  bool graded = grading && std::all_of(gens.begin(), gens.end(), [&](const Polynomial& g) {
                  return g.is_homogeneous(*grading);
                });
  if (graded) rows.push_back(*grading);
  rows.push_back(block);
  for (const auto& r : ring->order().weights()) rows.push_back(r);
  std::vector<int> priority(drop.begin(), drop.end());
  for (int v : ring->order().priority()) {
    if (std::find(drop.begin(), drop.end(), v) == drop.end()) priority.push_back(v);
  }
  RingPtr elim = ring->with_order(TermOrder::custom(std::move(rows), std::move(priority)));
  auto gb = groebner_basis(elim, gens);
  std::vector<Polynomial> out;
  for (const auto& g : gb) {
    if (g.avoids(drop)) out.push_back(g.in_ring(ring));
  }
  return out;
}

Ideal eliminate(const Ideal& j, const std::vector<int>& drop) {
  if (drop.empty()) return j;
  return Ideal(j.ring(), eliminate_variables(j.ring(), j.generators(), drop, total_degree_row(j.ring()->nvars())));
}

Ideal intersect(const Ideal& a, const Ideal& b) {
  if (a.generators().empty() || b.generators().empty()) return Ideal(a.ring());
  RingPtr big = with_one_more_aux(a.ring());
  const int t = a.ring()->nvars();
  Polynomial tvar = Polynomial::variable(big, t);
  Polynomial one_minus_t = Polynomial::constant(big, big->one()) - tvar;
  std::vector<Polynomial> gens;
  for (const auto& f : a.generators()) gens.push_back(tvar * f.in_ring(big));
  for (const auto& g : b.generators()) gens.push_back(one_minus_t * g.in_ring(big));
  std::vector<int> grading = total_degree_row(t);
  grading.push_back(0);
  auto kept = eliminate_variables(big, gens, {t}, grading);
  std::vector<Polynomial> out;
  for (const auto& g : kept) out.push_back(g.in_ring(a.ring()));
  return Ideal(a.ring(), std::move(out));
}

Ideal colon(const Ideal& j, const Polynomial& f) {
  if (f.is_zero()) throw MathError("colon by the zero polynomial");
  Polynomial g = f.in_ring(j.ring());
  if (g.lead_monomial().is_one() && g.size() == 1) return j;
  Ideal k = intersect(j, Ideal(j.ring(), {g}));
  std::vector<Polynomial> out;
  for (const auto& h : k.generators()) {
    auto q = divide_exact(h, g);
    if (!q) throw MathError("colon: intersection element not divisible by f");
    out.push_back(*q);
  }
  return Ideal(j.ring(), std::move(out));
}

Bidegree syzygy_degree(const Syzygy& s, const std::vector<Polynomial>& fs) {
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (!s[k].is_zero()) {
      auto d = fs[k].ring()->bidegree(s[k].lead_monomial()) + fs[k].ring()->bidegree(fs[k].lead_monomial());
      return d;
    }
  }
  return {0, 0};
}

namespace {

class ModuleCoords {
 public:
  int index(std::size_t comp, const Monomial& z) {
    auto key = std::make_pair(comp, z);
    auto it = ids_.find(key);
    if (it != ids_.end()) return it->second;
    int id = static_cast<int>(ids_.size());
    ids_.emplace(key, id);
    return id;
  }
  SparseRow vectorize(const Syzygy& s) {
    SparseRow r;
    for (std::size_t k = 0; k < s.size(); ++k) {
      for (const auto& t : s[k].terms()) r.emplace_back(index(k, t.mono), t.coeff);
    }
    std::sort(r.begin(), r.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return r;
  }

 private:
  std::map<std::pair<std::size_t, Monomial>, int> ids_;
};

Syzygy times_monomial(const Syzygy& s, const Monomial& z) {
  Syzygy out;
  for (const auto& p : s) out.push_back(p.times_term(p.ring()->one(), z));
  return out;
}

// Echelon of all monomial multiples of `gens` landing in bidegree d.
void fill_degree(Echelon& e, ModuleCoords& coords, const std::vector<Syzygy>& gens, const std::vector<Bidegree>& degs,
                 Bidegree d, const Ring& ring) {
  for (std::size_t g = 0; g < gens.size(); ++g) {
    Bidegree diff = d - degs[g];
    if (!diff.nonnegative()) continue;
    for (const auto& z : monomials_of_bidegree(ring, diff)) e.insert(coords.vectorize(times_monomial(gens[g], z)));
  }
}

}  // namespace

bool in_module_span(const Syzygy& v, const std::vector<Syzygy>& gens, const std::vector<Polynomial>& fs) {
  bool zero = std::all_of(v.begin(), v.end(), [](const Polynomial& p) { return p.is_zero(); });
  if (zero) return true;
  Bidegree d = syzygy_degree(v, fs);
  std::vector<Bidegree> degs;
  for (const auto& g : gens) degs.push_back(syzygy_degree(g, fs));
  Echelon e;
  ModuleCoords coords;
  fill_degree(e, coords, gens, degs, d, *fs.front().ring());
  return e.in_span(coords.vectorize(v));
}

std::vector<Syzygy> syzygies(const std::vector<Polynomial>& fs) {
  const std::size_t r = fs.size();
  if (r == 0) return {};
  RingPtr ring = fs.front().ring();
  for (const auto& f : fs) {
    if (f.is_zero()) throw MathError("syzygies of a zero polynomial");
    if (!f.is_bihomogeneous()) throw MathError("syzygies need bihomogeneous inputs");
  }
  const auto& ord = ring->order();
  Polynomial zero(ring);

  // Buchberger without criteria, tracking cofactors in terms of fs.
  std::vector<Polynomial> g;
  std::vector<Syzygy> cof;
  for (std::size_t k = 0; k < r; ++k) {
    Scalar inv = fs[k].lead_coeff().inverse();
    g.push_back(fs[k].in_ring(ring).scaled(inv));
    Syzygy c(r, zero);
    c[k] = Polynomial::constant(ring, inv);
    cof.push_back(std::move(c));
  }

  // Reduces p to zero or a remainder; returns quotients per basis element.
  auto tracked_reduce = [&](Polynomial p, std::vector<Polynomial>& quot) {
    quot.assign(g.size(), zero);
    Reducers red;
    for (const auto& h : g) red.add(&h);
    std::vector<Term> rem;
    while (!p.is_zero()) {
      int k = red.find_index(p.lead_monomial());
      if (k >= 0) {
        Scalar c = p.lead_coeff();
        Monomial q = p.lead_monomial() / g[k].lead_monomial();
        quot[k].add_scaled(c, q, Polynomial::constant(ring, ring->one()));
        p.add_scaled(-c, q, g[k]);
      } else {
        rem.push_back(p.terms().front());
        p.drop_lead();
      }
    }
    return Polynomial::from_sorted(ring, std::move(rem));
  };

  std::vector<std::pair<std::size_t, std::size_t>> queue;
  for (std::size_t j = 1; j < r; ++j)
    for (std::size_t i = 0; i < j; ++i) queue.emplace_back(i, j);
  while (!queue.empty()) {
    std::size_t best = 0;
    auto lcm_of = [&](const std::pair<std::size_t, std::size_t>& p) {
      return lcm(g[p.first].lead_monomial(), g[p.second].lead_monomial());
    };
    for (std::size_t k = 1; k < queue.size(); ++k) {
      if (ord.greater(lcm_of(queue[best]), lcm_of(queue[k]))) best = k;
    }
    auto [i, j] = queue[best];
    queue.erase(queue.begin() + static_cast<std::ptrdiff_t>(best));
    if (g[i].lead_monomial().coprime(g[j].lead_monomial())) continue;
    Monomial l = lcm(g[i].lead_monomial(), g[j].lead_monomial());
    Monomial ai = l / g[i].lead_monomial();
    Monomial aj = l / g[j].lead_monomial();
    Polynomial s = g[i].times_term(ring->one(), ai);
    s.add_scaled(-ring->one(), aj, g[j]);
    std::vector<Polynomial> quot;
    Polynomial h = tracked_reduce(std::move(s), quot);
    if (h.is_zero()) continue;
    Syzygy c(r, zero);
    for (std::size_t k = 0; k < r; ++k) {
      c[k].add_scaled(ring->one(), ai, cof[i][k]);
      c[k].add_scaled(-ring->one(), aj, cof[j][k]);
      for (std::size_t b = 0; b < quot.size(); ++b) {
        if (quot[b].is_zero()) continue;
        c[k] -= quot[b] * cof[b][k];
      }
    }
    Scalar inv = h.lead_coeff().inverse();
    for (auto& p : c) p = p.scaled(inv);
    g.push_back(h.scaled(inv));
    cof.push_back(std::move(c));
    for (std::size_t k = 0; k + 1 < g.size(); ++k) queue.emplace_back(k, g.size() - 1);
  }

  // Schreyer relations over the final basis, mapped back to fs.
  std::vector<Syzygy> raw;
  for (std::size_t j = 1; j < g.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      Monomial l = lcm(g[i].lead_monomial(), g[j].lead_monomial());
      Monomial ai = l / g[i].lead_monomial();
      Monomial aj = l / g[j].lead_monomial();
      Polynomial s = g[i].times_term(ring->one(), ai);
      s.add_scaled(-ring->one(), aj, g[j]);
      std::vector<Polynomial> quot;
      Polynomial h = tracked_reduce(std::move(s), quot);
      if (!h.is_zero()) throw MathError("syzygies: internal basis is not a Groebner basis");
      Syzygy c(r, zero);
      for (std::size_t k = 0; k < r; ++k) {
        c[k].add_scaled(ring->one(), ai, cof[i][k]);
        c[k].add_scaled(-ring->one(), aj, cof[j][k]);
        for (std::size_t b = 0; b < quot.size(); ++b) {
          if (quot[b].is_zero()) continue;
          c[k] -= quot[b] * cof[b][k];
        }
      }
      if (std::any_of(c.begin(), c.end(), [](const Polynomial& p) { return !p.is_zero(); })) raw.push_back(std::move(c));
    }
  }

  // Graded Nakayama: keep a column only if lower columns do not span it.
  std::vector<Bidegree> degs;
  for (const auto& s : raw) degs.push_back(syzygy_degree(s, fs));
  std::vector<std::size_t> idx(raw.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    int ta = degs[a].x + degs[a].y;
    int tb = degs[b].x + degs[b].y;
    return ta != tb ? ta < tb : degs[a] < degs[b];
  });
  std::vector<Syzygy> kept;
  std::vector<Bidegree> kept_degs;
  std::size_t pos = 0;
  while (pos < idx.size()) {
    Bidegree d = degs[idx[pos]];
    Echelon e;
    ModuleCoords coords;
    fill_degree(e, coords, kept, kept_degs, d, *ring);
    while (pos < idx.size() && degs[idx[pos]] == d) {
      const Syzygy& s = raw[idx[pos]];
      if (e.insert(coords.vectorize(s))) {
        kept.push_back(s);
        kept_degs.push_back(d);
      }
      ++pos;
    }
  }
  return kept;
}

}  // namespace bireg
