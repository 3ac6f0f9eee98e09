// SPDX-License-Identifier: Apache-2.0
#include "biregkit/resolve.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>
#include <set>

namespace bireg {

std::vector<int> Grading::degree(const Monomial& z) const {
  std::vector<int> c(rows.size(), 0);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t v = 0; v < rows[r].size(); ++v) c[r] += rows[r][v] * z.exp[v];
  }
  return c;
}

Grading coarse_grading(const Ring& ring) {
  const int nv = ring.n() + ring.m();
  Grading g;
  g.rows.assign(2, std::vector<int>(static_cast<std::size_t>(nv), 0));
  for (int i = 0; i < ring.n(); ++i) g.rows[0][ring.x(i)] = 1;
  for (int j = 0; j < ring.m(); ++j) g.rows[1][ring.y(j)] = 1;
  return g;
}

namespace {

Grading multigrading(const Ring& ring) {
  Grading g = coarse_grading(ring);
  const int nv = ring.n() + ring.m();
  for (int v = 0; v < nv; ++v) {
    std::vector<int> row(static_cast<std::size_t>(nv), 0);
    row[v] = 1;
    g.rows.push_back(std::move(row));
  }
  return g;
}

void require_bihomogeneous(const Ideal& j) {
  if (!j.is_bihomogeneous()) throw MathError("Koszul homology needs a bihomogeneous ideal");
}

}  // namespace

Grading fine_grading(const Ideal& j) {
  const Ring& ring = *j.ring();
  const int nv = ring.n() + ring.m();
  const Field q = Field::rationals();
  // Rows of the lattice spanned by exponent differences inside each generator.
  std::vector<std::vector<int>> diffs;
  for (const auto& f : j.generators()) {
    const auto& ts = f.terms();
    for (std::size_t k = 1; k < ts.size(); ++k) {
      std::vector<int> d(static_cast<std::size_t>(nv));
      for (int v = 0; v < nv; ++v) d[v] = ts[k].mono[v] - ts[0].mono[v];
      diffs.push_back(std::move(d));
    }
  }
  std::vector<SparseRow> images(static_cast<std::size_t>(nv));
  for (int v = 0; v < nv; ++v) {
    for (std::size_t r = 0; r < diffs.size(); ++r) {
      if (diffs[r][v]) images[v].emplace_back(static_cast<int>(r), Scalar::from_int(diffs[r][v], q));
    }
  }
  Grading g = coarse_grading(ring);
  for (const auto& w : kernel(images, static_cast<int>(diffs.size()), q)) {
    mpz_class den = 1;
    for (const auto& [v, c] : w) den = lcm(den, mpz_class(c.rational().get_den()));
    std::vector<int> row(static_cast<std::size_t>(nv), 0);
    for (const auto& [v, c] : w) {
      mpq_class s = c.rational() * den;
      row[v] = static_cast<int>(s.get_num().get_si());
    }
    g.rows.push_back(std::move(row));
  }
  return g;
}

KoszulComplex::KoszulComplex(Ideal j, std::vector<int> vars, Grading grading)
    : j_(std::move(j)), in_(j_.initial_ideal()), vars_(std::move(vars)), grading_(std::move(grading)) {
  if (vars_.size() > 20) throw MathError("Koszul complex on too many variables");
}

const std::vector<Monomial>& KoszulComplex::standard(const std::vector<int>& c) {
  static const std::vector<Monomial> kNone;
  Bidegree d = grading_.bidegree(c);
  if (!d.nonnegative()) return kNone;
  auto it = standard_.find(d);
  if (it == standard_.end()) {
    std::unordered_map<std::vector<int>, std::vector<Monomial>, VectorHash> buckets;
    for (const auto& z : in_.standard_monomials(d)) buckets[grading_.degree(z)].push_back(z);
    it = standard_.emplace(d, std::move(buckets)).first;
  }
  auto b = it->second.find(c);
  return b == it->second.end() ? kNone : b->second;
}

const Polynomial& KoszulComplex::reduce_monomial(const Monomial& z) {
  auto it = nf_.find(z);
  if (it != nf_.end()) return it->second;
  Polynomial p = Polynomial::term(j_.ring(), j_.ring()->one(), z);
  if (in_.contains(z)) p = j_.normal_form(p);
  return nf_.emplace(z, std::move(p)).first->second;
}

KoszulStrand KoszulComplex::strand(const std::vector<int>& c) {
  const int k = static_cast<int>(vars_.size());
  KoszulStrand s;
  s.cells.resize(static_cast<std::size_t>(k) + 1);
  s.boundary.resize(static_cast<std::size_t>(k) + 1);
  std::vector<std::vector<int>> vdeg;
  for (int v : vars_) vdeg.push_back(grading_.degree(Monomial::variable(v)));
  std::vector<std::map<std::pair<std::uint32_t, Monomial>, int>> index(static_cast<std::size_t>(k) + 1);
  for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
    std::vector<int> rest = c;
    for (int p = 0; p < k; ++p) {
      if (!(mask >> p & 1u)) continue;
      for (std::size_t r = 0; r < rest.size(); ++r) rest[r] -= vdeg[p][r];
    }
    const int i = std::popcount(mask);
    for (const auto& w : standard(rest)) {
      index[i].emplace(std::make_pair(mask, w), static_cast<int>(s.cells[i].size()));
      s.cells[i].push_back({mask, w});
    }
  }
  for (int i = 1; i <= k; ++i) {
    for (const auto& cell : s.cells[i]) {
      std::map<int, Scalar> acc;
      int below = 0;
      for (int p = 0; p < k; ++p) {
        if (!(cell.wedge >> p & 1u)) continue;
        const bool negative = below++ % 2 == 1;
        std::uint32_t face = cell.wedge & ~(1u << p);
        const Polynomial& nf = reduce_monomial(cell.mono * Monomial::variable(vars_[p]));
        for (const auto& t : nf.terms()) {
          auto at = index[i - 1].find({face, t.mono});
          if (at == index[i - 1].end()) throw MathError("Koszul strand: face outside the strand");
          auto [slot, fresh] = acc.try_emplace(at->second, Scalar::zero(j_.ring()->field()));
          if (negative) {
            slot->second -= t.coeff;
          } else {
            slot->second += t.coeff;
          }
        }
      }
      SparseRow row;
      for (auto& [col, v] : acc) {
        if (!v.is_zero()) row.emplace_back(col, std::move(v));
      }
      s.boundary[i].push_back(std::move(row));
    }
  }
  return s;
}

std::vector<long> KoszulComplex::homology(const std::vector<int>& c) {
  KoszulStrand s = strand(c);
  const std::size_t k = vars_.size();
  std::vector<long> rk(k + 2, 0);
  for (std::size_t i = 1; i <= k; ++i) rk[i] = static_cast<long>(rank(s.boundary[i]));
  std::vector<long> h(k + 1);
  for (std::size_t i = 0; i <= k; ++i) h[i] = static_cast<long>(s.cells[i].size()) - rk[i] - rk[i + 1];
  return h;
}

namespace {

std::vector<int> all_variables(const Ring& r) {
  std::vector<int> v(static_cast<std::size_t>(r.n() + r.m()));
  std::iota(v.begin(), v.end(), 0);
  return v;
}

}  // namespace

std::map<std::pair<int, Monomial>, long> multigraded_betti(const MonomialIdeal& j) {
  const Ring& r = *j.ring();
  KoszulComplex kc(Ideal::from_monomials(j), all_variables(r), multigrading(r));
  std::map<std::pair<int, Monomial>, long> out;
  for (const auto& alpha : j.lcm_lattice()) {
    auto h = kc.homology(kc.grading().degree(alpha));
    for (std::size_t i = 0; i < h.size(); ++i) {
      if (h[i]) out[{static_cast<int>(i), alpha}] += h[i];
    }
  }
  return out;
}

BettiTable koszul_betti(const Ideal& j, std::optional<Bidegree> box) {
  require_bihomogeneous(j);
  const Ring& r = *j.ring();
  BettiTable t;
  t.box = box;
  MonomialIdeal in = j.initial_ideal();
  auto support = multigraded_betti(in);
  auto inside = [&](Bidegree d) { return !box || d.leq(*box); };
  if (j.is_monomial() || in.is_zero() || in.is_unit()) {
    for (const auto& [key, b] : support) {
      Bidegree d = r.bidegree(key.second);
      if (inside(d)) {
        t.entries[{key.first, d}] += b;
      } else {
        t.complete = false;
      }
    }
    return t;
  }
  KoszulComplex kc(j, all_variables(r), fine_grading(j));
  std::set<std::vector<int>> degrees;
  for (const auto& [key, b] : support) {
    if (!inside(r.bidegree(key.second))) {
      t.complete = false;
      continue;
    }
    degrees.insert(kc.grading().degree(key.second));
  }
  for (const auto& c : degrees) {
    auto h = kc.homology(c);
    Bidegree d = kc.grading().bidegree(c);
    for (std::size_t i = 0; i < h.size(); ++i) {
      if (h[i]) t.entries[{static_cast<int>(i), d}] += h[i];
    }
  }
  return t;
}

namespace {

// Column-sparse matrix with a row index, for cancellation.
struct CancelMatrix {
  std::map<int, std::map<int, Scalar>> cols;
  std::map<int, std::set<int>> rows;

  void set(int r, int c, Scalar v) {
    if (v.is_zero()) {
      auto it = cols.find(c);
      if (it != cols.end()) {
        it->second.erase(r);
        if (it->second.empty()) cols.erase(it);
      }
      auto rt = rows.find(r);
      if (rt != rows.end()) {
        rt->second.erase(c);
        if (rt->second.empty()) rows.erase(rt);
      }
      return;
    }
    cols[c][r] = std::move(v);
    rows[r].insert(c);
  }
  void erase_col(int c) {
    auto it = cols.find(c);
    if (it == cols.end()) return;
    for (const auto& [r, v] : it->second) {
      auto& rs = rows[r];
      rs.erase(c);
      if (rs.empty()) rows.erase(r);
    }
    cols.erase(it);
  }
  void erase_row(int r) {
    auto it = rows.find(r);
    if (it == rows.end()) return;
    for (int c : it->second) {
      auto& cs = cols[c];
      cs.erase(r);
      if (cs.empty()) cols.erase(c);
    }
    rows.erase(it);
  }
};

}  // namespace

BettiTable taylor_betti(const MonomialIdeal& j, std::uint64_t pivot_seed) {
  const auto& g = j.generators();
  const int r = static_cast<int>(g.size());
  if (r > 20) throw MathError("Taylor complex limited to 20 generators");
  const Ring& ring = *j.ring();
  const Field field = ring.field();
  std::vector<Monomial> lcms(std::size_t{1} << r);
  std::unordered_map<Monomial, std::vector<std::uint32_t>, MonomialHash> classes;
  for (std::uint32_t mask = 0; mask < (1u << r); ++mask) {
    if (mask) {
      int low = std::countr_zero(mask);
      lcms[mask] = lcm(lcms[mask & (mask - 1)], g[low]);
    }
    classes[lcms[mask]].push_back(mask);
  }
  std::mt19937_64 rng(pivot_seed);
  BettiTable t;
  for (const auto& [alpha, masks] : classes) {
    std::vector<std::vector<std::uint32_t>> cells(static_cast<std::size_t>(r) + 1);
    std::unordered_map<std::uint32_t, int> where;
    for (auto mask : masks) {
      auto& level = cells[std::popcount(mask)];
      where[mask] = static_cast<int>(level.size());
      level.push_back(mask);
    }
    std::vector<CancelMatrix> d(static_cast<std::size_t>(r) + 2);
    for (int i = 1; i <= r; ++i) {
      for (std::size_t c = 0; c < cells[i].size(); ++c) {
        std::uint32_t sigma = cells[i][c];
        int pos = 0;
        for (int k = 0; k < r; ++k) {
          if (!(sigma >> k & 1u)) continue;
          std::uint32_t face = sigma & ~(1u << k);
          if (lcms[face] == alpha) {
            d[i].set(where[face], static_cast<int>(c), Scalar::from_int(pos % 2 ? -1 : 1, field));
          }
          ++pos;
        }
      }
    }
    std::vector<long> alive(static_cast<std::size_t>(r) + 1);
    for (int i = 0; i <= r; ++i) alive[i] = static_cast<long>(cells[i].size());
    for (int i = 1; i <= r; ++i) {
      auto& m = d[i];
      while (!m.cols.empty()) {
        auto ct = m.cols.begin();
        auto rt = ct->second.begin();
        if (pivot_seed) {
          std::advance(ct, std::uniform_int_distribution<std::size_t>(0, m.cols.size() - 1)(rng));
          rt = ct->second.begin();
          std::advance(rt, std::uniform_int_distribution<std::size_t>(0, ct->second.size() - 1)(rng));
        }
        const int b = ct->first;
        const int a = rt->first;
        const Scalar inv = rt->second.inverse();
        const std::map<int, Scalar> pivot_col = ct->second;
        const std::set<int> pivot_row = m.rows[a];
        for (int c2 : pivot_row) {
          if (c2 == b) continue;
          Scalar factor = m.cols[c2][a] * inv;
          for (const auto& [r2, v] : pivot_col) {
            if (r2 == a) continue;
            auto& col = m.cols[c2];
            auto old = col.find(r2);
            Scalar nv = old == col.end() ? Scalar::zero(field) : old->second;
            nv -= factor * v;
            m.set(r2, c2, std::move(nv));
          }
        }
        m.erase_col(b);
        m.erase_row(a);
        d[i + 1].erase_row(b);
        d[i - 1].erase_col(a);
        --alive[i];
        --alive[i - 1];
      }
    }
    Bidegree deg = ring.bidegree(alpha);
    for (int i = 0; i <= r; ++i) {
      if (alive[i]) t.entries[{i, deg}] += alive[i];
    }
  }
  return t;
}

RegValue reg_from_betti(const BettiTable& t, Direction dir) {
  if (t.entries.empty()) return {};
  int best = 0;
  bool first = true;
  bool on_edge = false;
  for (const auto& [key, b] : t.entries) {
    const auto& [i, d] = key;
    const int v = (dir == Direction::kX ? d.x : d.y) - i;
    const bool edge = t.box && (dir == Direction::kX ? d.x == t.box->x : d.y == t.box->y);
    if (first || v > best) {
      best = v;
      on_edge = edge;
      first = false;
    } else if (v == best) {
      on_edge = on_edge || edge;
    }
  }
  if (!t.complete && on_edge) return {RegValue::Kind::kIncomplete, best};
  return RegValue::of(best);
}

RegValue ideal_reg_from_betti(const BettiTable& t, Direction dir) {
  if (t.entries.empty()) return RegValue::of(0);  // S/J = 0, so J = S
  BettiTable shifted;
  shifted.box = t.box;
  shifted.complete = t.complete;
  for (const auto& [key, b] : t.entries) {
    if (key.first >= 1) shifted.entries[{key.first - 1, key.second}] = b;
  }
  return reg_from_betti(shifted, dir);
}

BettiTable strand_betti(const Ideal& j, int ydeg) {
  require_bihomogeneous(j);
  const Ring& r = *j.ring();
  BettiTable t;
  if (ydeg < 0) return t;
  MonomialIdeal in = j.initial_ideal();
  std::vector<int> xs(static_cast<std::size_t>(r.n()));
  std::iota(xs.begin(), xs.end(), 0);
  std::vector<int> ys;
  for (int l = 0; l < r.m(); ++l) ys.push_back(r.y(l));
  KoszulComplex mono(Ideal::from_monomials(in), xs, multigrading(r));
  std::set<Monomial> points;
  for (const auto& yv : monomials_of_degree(ys, ydeg)) {
    std::vector<Monomial> av;
    for (const auto& z : in.generators()) {
      Monomial yz;
      for (int y : ys) yz[y] = z[y];
      if (!yz.divides(yv)) continue;
      av.push_back(z / yz);
    }
    for (const auto& alpha : MonomialIdeal(j.ring(), av).lcm_lattice()) {
      Monomial pt = alpha * yv;
      auto h = mono.homology(mono.grading().degree(pt));
      if (std::any_of(h.begin(), h.end(), [](long v) { return v != 0; })) points.insert(pt);
    }
  }
  auto record = [&](KoszulComplex& kc, const std::vector<int>& c) {
    auto h = kc.homology(c);
    Bidegree d = kc.grading().bidegree(c);
    for (std::size_t i = 0; i < h.size(); ++i) {
      if (h[i]) t.entries[{static_cast<int>(i), d}] += h[i];
    }
  };
  if (j.is_monomial()) {
    for (const auto& pt : points) record(mono, mono.grading().degree(pt));
    return t;
  }
  KoszulComplex kc(j, xs, fine_grading(j));
  std::set<std::vector<int>> degrees;
  for (const auto& pt : points) degrees.insert(kc.grading().degree(pt));
  for (const auto& c : degrees) record(kc, c);
  return t;
}

RegValue strand_regularity(const Ideal& j, int ydeg) { return reg_from_betti(strand_betti(j, ydeg), Direction::kX); }

}  // namespace bireg
