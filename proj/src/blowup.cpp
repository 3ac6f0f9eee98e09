// SPDX-License-Identifier: Apache-2.0
#include "biregkit/blowup.hpp"

#include <algorithm>
#include <map>
#include <random>

namespace bireg {

int generator_degree(const std::vector<Polynomial>& fs) {
  if (fs.empty()) throw MathError("need at least one generator");
  int d = -1;
  for (const auto& f : fs) {
    if (f.is_zero()) throw MathError("zero generator");
    auto bd = f.bidegree();
    if (!std::holds_alternative<Bidegree>(bd) || std::get<Bidegree>(bd).y != 0) {
      throw MathError("generators must be homogeneous in the x variables only");
    }
    const int e = std::get<Bidegree>(bd).x;
    if (d >= 0 && e != d) throw MathError("generators of unequal degree");
    d = e;
  }
  if (d < 1) throw MathError("generators must have positive degree");
  return d;
}

namespace {

RingPtr blowup_ring(const Ring& base, int m) { return Ring::make(base.n(), m, base.field()); }

Polynomial lift(const Polynomial& p, const RingPtr& target) { return Polynomial(target, p.terms()); }

}  // namespace

ReesPresentation rees_ideal(const std::vector<Polynomial>& fs) {
  const int d = generator_degree(fs);
  const Ring& base = *fs.front().ring();
  const int n = base.n();
  const int m = static_cast<int>(fs.size());
  RingPtr s = blowup_ring(base, m);
  TermOrder order = TermOrder::bigraded(n, m, 1);
  auto rows = order.weights();
  rows.push_back(std::vector<int>(static_cast<std::size_t>(n + m + 1), 0));
  rows.back().back() = 1;
  auto priority = order.priority();
  std::rotate(priority.rbegin(), priority.rbegin() + 1, priority.rend());
  RingPtr big = Ring::make(n, m, base.field(), TermOrder::custom(rows, priority), 1);
  const int t = big->t(0);
  std::vector<Polynomial> gens;
  for (int k = 0; k < m; ++k) {
    gens.push_back(Polynomial::variable(big, big->y(k)) -
                   lift(fs[k], big) * Polynomial::variable(big, t));
  }
  std::vector<int> grading(static_cast<std::size_t>(n + m + 1), 0);
  for (int i = 0; i < n; ++i) grading[i] = 1;
  for (int k = 0; k < m; ++k) grading[big->y(k)] = d;
  std::vector<Polynomial> out;
  for (const auto& g : eliminate_variables(big, gens, {t}, grading)) out.push_back(Polynomial(s, g.terms()));
  return {fs, d, Ideal(s, std::move(out)), BlowupKind::kRees};
}

ReesPresentation symmetric_ideal(const std::vector<Polynomial>& fs) {
  const int d = generator_degree(fs);
  const Ring& base = *fs.front().ring();
  const int m = static_cast<int>(fs.size());
  RingPtr s = blowup_ring(base, m);
  std::vector<Polynomial> out;
  for (const auto& syz : syzygies(fs)) {
    Polynomial form(s);
    for (int k = 0; k < m; ++k) form += lift(syz[k], s) * Polynomial::variable(s, s->y(k));
    out.push_back(std::move(form));
  }
  return {fs, d, Ideal(s, std::move(out)), BlowupKind::kSymmetric};
}

ReesPresentation presentation(const std::vector<Polynomial>& fs, BlowupKind kind) {
  return kind == BlowupKind::kRees ? rees_ideal(fs) : symmetric_ideal(fs);
}

Ideal power_ideal(const Ideal& i, int j) {
  if (j < 1) throw MathError("power_ideal needs j >= 1");
  const RingPtr& ring = i.ring();
  std::vector<Polynomial> gens;
  for (const auto& g : i.generators()) {
    if (!g.is_zero()) gens.push_back(g);
  }
  // products over nondecreasing index tuples
  std::vector<std::pair<Polynomial, std::size_t>> layer;
  layer.emplace_back(Polynomial::constant(ring, ring->one()), 0);
  for (int step = 0; step < j; ++step) {
    std::vector<std::pair<Polynomial, std::size_t>> next;
    for (const auto& [p, from] : layer) {
      for (std::size_t k = from; k < gens.size(); ++k) next.emplace_back(p * gens[k], k);
    }
    layer = std::move(next);
  }
  std::map<int, Echelon> by_degree;
  std::map<Monomial, int> column;
  std::vector<Polynomial> kept;
  for (const auto& [p, from] : layer) {
    SparseRow row;
    for (const auto& t : p.terms()) {
      auto [it, fresh] = column.try_emplace(t.mono, static_cast<int>(column.size()));
      row.emplace_back(it->second, t.coeff);
    }
    std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    if (by_degree[p.lead_monomial().degree()].insert(std::move(row))) kept.push_back(p);
  }
  return Ideal(ring, std::move(kept));
}

std::optional<LinearFit> fit_tail(const std::vector<std::pair<int, int>>& rows, int d) {
  if (rows.size() < 2) return std::nullopt;
  std::size_t k = rows.size() - 1;
  while (k > 0) {
    const auto& a = rows[k - 1];
    const auto& b = rows[k];
    if (b.second - a.second != d * (b.first - a.first)) break;
    --k;
  }
  if (k == rows.size() - 1) return std::nullopt;
  const auto& last = rows.back();
  return LinearFit{d, last.second - d * last.first, rows[k].first};
}

PowerRegularityTable power_reg_table(const std::vector<Polynomial>& fs, int jmax, BlowupKind kind, std::uint64_t seed) {
  PowerRegularityTable t;
  t.d = generator_degree(fs);
  t.kind = kind;
  if (kind == BlowupKind::kRees) {
    Ideal base(fs.front().ring(), fs);
    for (int j = 1; j <= jmax; ++j) t.rows.emplace_back(j, graded_regularity(power_ideal(base, j), seed));
  } else {
    auto p = symmetric_ideal(fs);
    for (int j = 1; j <= jmax; ++j) {
      RegValue r = strand_regularity(p.j, j);
      if (!r.ok()) throw MathError("symmetric power strand has no regularity");
      t.rows.emplace_back(j, r.value + j * t.d);
    }
  }
  t.fitted = fit_tail(t.rows, t.d);
  return t;
}

LinearityThreshold linearity_threshold_bigin(const ReesPresentation& p, int trials, std::uint64_t seed) {
  LinearityThreshold out;
  if (p.j.is_zero()) return out;
  auto b = bigin(p.j, trials, seed);
  out.j0 = m_invariants(b.ideal).my;
  out.agreed = b.agreed;
  out.bigin = b.ideal;
  auto r = reg_via_s_values(p.j, seed);
  out.c_bound = r.reg_x.value;
  return out;
}

MTable m_table(const MonomialIdeal& j, int jmax) {
  if (!is_bistable(j)) throw MathError("m_table needs a bistable ideal");
  const Ring& r = *j.ring();
  MTable t;
  t.m.assign(static_cast<std::size_t>(r.n()), std::vector<int>(static_cast<std::size_t>(jmax) + 1, 0));
  t.c.assign(static_cast<std::size_t>(r.n()), 0);
  if (j.is_zero()) return t;
  auto mi = m_invariants(j);
  t.mx = mi.mx;
  t.my = mi.my;
  std::vector<int> ys;
  for (int l = 0; l < r.m(); ++l) ys.push_back(r.y(l));
  auto split = [&](const Monomial& z) {
    Monomial u = z;
    Monomial v;
    for (int y : ys) {
      v[y] = z[y];
      u[y] = 0;
    }
    return std::make_pair(u, v);
  };
  auto record = [&](std::vector<int>& into, const Monomial& u) {
    const int i = max_x_index(r, u);
    if (i >= 0) into[i] = std::max(into[i], u.degree() - 1);
  };
  for (int jj = 0; jj <= jmax; ++jj) {
    std::vector<int> col(static_cast<std::size_t>(r.n()), 0);
    for (const auto& yv : monomials_of_degree(ys, jj)) {
      std::vector<Monomial> iv;
      for (const auto& z : j.generators()) {
        auto [u, v] = split(z);
        if (v.divides(yv)) iv.push_back(u);
      }
      for (const auto& u : minimalize(iv)) record(col, u);
    }
    for (int i = 0; i < r.n(); ++i) t.m[i][jj] = col[i];
  }
  // generators of the truncation in y-degree >= m_y
  std::vector<Monomial> trunc;
  for (const auto& z : j.generators()) {
    const int vy = r.bidegree(z).y;
    for (const auto& w : monomials_of_degree(ys, t.my - vy)) trunc.push_back(z * w);
  }
  for (const auto& z : minimalize(trunc)) record(t.c, split(z).first);
  return t;
}

namespace {

Polynomial random_y_form(const RingPtr& ring, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> box(1, 1000);
  std::vector<Term> terms;
  for (int l = 0; l < ring->m(); ++l) {
    long c = box(rng) * (rng() % 2 ? 1 : -1);
    terms.push_back({ring->scalar(c), Monomial::variable(ring->y(l))});
  }
  Polynomial f(ring, terms);
  if (f.is_zero()) f = Polynomial::variable(ring, ring->y(0));
  return f;
}

std::map<std::pair<std::uint32_t, Monomial>, int> cell_index(const std::vector<KoszulCell>& cells) {
  std::map<std::pair<std::uint32_t, Monomial>, int> idx;
  for (std::size_t k = 0; k < cells.size(); ++k) idx.emplace(std::make_pair(cells[k].wedge, cells[k].mono), static_cast<int>(k));
  return idx;
}

}  // namespace

WInvariant w_invariant(const Ideal& j, std::uint64_t seed, std::optional<int> b_max) {
  if (!j.is_bihomogeneous()) throw MathError("w needs a bihomogeneous ideal");
  const RingPtr& ring = j.ring();
  const int n = ring->n();
  const int m = ring->m();
  WInvariant out;

  if (m == 0 || n == 0 || j.is_unit()) {
    out.complete = true;
    return out;
  }
  auto regs = reg_via_s_values(j, seed);
  out.b_max = b_max ? *b_max : regs.reg_y.value + 2 * m + 2;
  out.form = random_y_form(ring, seed ^ 0x9e3779b97f4a7c15ULL);
  std::vector<int> xs;
  for (int i = 0; i < n; ++i) xs.push_back(ring->x(i));
  KoszulComplex kc(j, xs, coarse_grading(*ring));
  const Field field = ring->field();
  std::vector<bool> hit(static_cast<std::size_t>(out.b_max) + 1, false);
  for (int b = 0; b <= out.b_max; ++b) {
    for (int a = 1; a <= regs.reg_x.value + n; ++a) {
      KoszulStrand here = kc.strand({a, b});
      KoszulStrand up = kc.strand({a, b + 1});
      for (int i = std::max(1, a - regs.reg_x.value); i <= std::min(n, a); ++i) {
        const auto& cells = here.cells[i];
        if (cells.empty()) continue;
        auto z = kernel(here.boundary[i], static_cast<int>(here.cells[i - 1].size()), field);
        if (z.empty()) continue;
        const long dim_b = i + 1 <= n ? static_cast<long>(rank(here.boundary[i + 1])) : 0;
        if (static_cast<long>(z.size()) == dim_b) continue;  // H_i = 0 here
        auto target = cell_index(up.cells[i]);
        Echelon e;
        if (i + 1 <= n) {
          for (const auto& row : up.boundary[i + 1]) e.insert(row);
        }
        const std::size_t base_rank = e.rank();
        for (const auto& vec : z) {
          std::map<int, Scalar> acc;
          for (const auto& [k, c] : vec) {
            for (const auto& lt : out.form->terms()) {
              const Polynomial& nf = kc.reduce_monomial(cells[k].mono * lt.mono);
              for (const auto& t : nf.terms()) {
                int col = target.at({cells[k].wedge, t.mono});
                auto [slot, fresh] = acc.try_emplace(col, Scalar::zero(field));
                slot->second += c * lt.coeff * t.coeff;
              }
            }
          }
          SparseRow row;
          for (auto& [col, v] : acc) {
            if (!v.is_zero()) row.emplace_back(col, std::move(v));
          }
          e.insert(std::move(row));
        }
        const long image = static_cast<long>(e.rank() - base_rank);
        const long ker = static_cast<long>(z.size()) - image - dim_b;
        if (ker > 0) {
          out.witnesses.emplace_back(i, Bidegree{a, b});
          out.w = std::max(out.w.value_or(b), b);
          hit[b] = true;
        }
      }
    }
  }
  out.complete = out.b_max + 1 >= m;
  for (int b = out.b_max - m + 1; b <= out.b_max && out.complete; ++b) out.complete = b >= 0 && !hit[b];
  return out;
}

int ci_reg_formula(std::vector<Bidegree> zs) {
  for (auto z : zs) {
    if (z.x <= 0 || z.y != 1) throw MathError("ci formula needs deg_x > 0 and deg_y = 1");
  }
  std::sort(zs.begin(), zs.end(), [](Bidegree a, Bidegree b) { return a.x > b.x; });
  int best = 0;
  int sum = 0;
  for (std::size_t i = 0; i < zs.size(); ++i) {
    sum += zs[i].x;
    best = i == 0 ? sum - 1 : std::max(best, sum - static_cast<int>(i) - 1);
  }
  return best;
}

int krull_dimension(const Ideal& j) {
  if (j.is_unit()) return -1;
  MonomialIdeal in = j.initial_ideal();
  const int nv = j.ring()->n() + j.ring()->m();
  std::vector<std::uint32_t> supports;
  for (const auto& z : in.generators()) {
    std::uint32_t s = 0;
    for (int v = 0; v < nv; ++v) {
      if (z[v]) s |= 1u << v;
    }
    supports.push_back(s);
  }
  int best = nv;
  for (std::uint32_t cover = 0; cover < (1u << nv); ++cover) {
    const int size = std::popcount(cover);
    if (size >= best) continue;
    if (std::all_of(supports.begin(), supports.end(), [&](std::uint32_t s) { return (s & cover) != 0; })) best = size;
  }
  return nv - best;
}

bool is_complete_intersection(const Ideal& j) {
  int t = 0;
  for (const auto& g : j.generators()) t += g.is_zero() ? 0 : 1;
  const int nv = j.ring()->n() + j.ring()->m();
  return !j.is_unit() && nv - krull_dimension(j) == t;
}

namespace {

Polynomial determinant(const std::vector<std::vector<Polynomial>>& a, const RingPtr& ring) {
  const std::size_t k = a.size();
  if (k == 0) return Polynomial::constant(ring, ring->one());
  if (k == 1) return a[0][0];
  Polynomial det(ring);
  for (std::size_t c = 0; c < k; ++c) {
    if (a[0][c].is_zero()) continue;
    std::vector<std::vector<Polynomial>> minor;
    for (std::size_t r = 1; r < k; ++r) {
      std::vector<Polynomial> row;
      for (std::size_t q = 0; q < k; ++q) {
        if (q != c) row.push_back(a[r][q]);
      }
      minor.push_back(std::move(row));
    }
    Polynomial term = a[0][c] * determinant(minor, ring);
    if (c % 2) {
      det -= term;
    } else {
      det += term;
    }
  }
  return det;
}

}  // namespace

HilbertBurch hilbert_burch_analysis(const std::vector<Polynomial>& fs) {
  generator_degree(fs);
  HilbertBurch hb;
  const std::size_t m = fs.size();
  const RingPtr& ring = fs.front().ring();
  if (m < 2) return hb;
  auto syz = syzygies(fs);
  hb.matrix.assign(m, std::vector<Polynomial>(syz.size(), Polynomial(ring)));
  for (std::size_t c = 0; c < syz.size(); ++c) {
    for (std::size_t r = 0; r < m; ++r) hb.matrix[r][c] = syz[c][r];
  }
  if (syz.size() != m - 1) return hb;
  std::vector<Polynomial> minors;
  for (std::size_t drop = 0; drop < m; ++drop) {
    std::vector<std::vector<Polynomial>> sub;
    for (std::size_t r = 0; r < m; ++r) {
      if (r != drop) sub.push_back(hb.matrix[r]);
    }
    minors.push_back(determinant(sub, ring));
  }
  hb.is_codim2_cm = Ideal(ring, minors).same_as(Ideal(ring, fs));
  if (!hb.is_codim2_cm) return hb;
  hb.linear_case = true;
  for (const auto& row : hb.matrix) {
    for (const auto& e : row) {
      if (!e.is_zero() && std::get<Bidegree>(e.bidegree()).x != 1) hb.linear_case = false;
    }
  }
  hb.threshold = hb.linear_case ? 1 : static_cast<int>(m) - 1;
  return hb;
}

Thresholds thresholds(const std::vector<Polynomial>& fs, BlowupKind kind, int trials, std::uint64_t seed) {
  Thresholds t;
  auto p = presentation(fs, kind);
  t.bigin = linearity_threshold_bigin(p, trials, seed);
  auto regs = reg_via_s_values(p.j, seed);
  t.reg_x = regs.reg_x;
  t.reg_y = regs.reg_y;
  t.w = w_invariant(p.j, seed);
  const int m = static_cast<int>(fs.size());
  t.j0_fourth = regs.reg_y.value + m;
  if (t.w.w) t.j0_fourth = std::max(t.j0_fourth, *t.w.w + m);
  t.burch = hilbert_burch_analysis(fs);
  return t;
}

}  // namespace bireg
