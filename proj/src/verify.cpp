// SPDX-License-Identifier: Apache-2.0
#include "biregkit/verify.hpp"

#include <chrono>
#include <random>
#include <sstream>

#include "biregkit/blowup.hpp"
#include "biregkit/corpus.hpp"
#include "biregkit/parser.hpp"
#include "biregkit/veronese.hpp"

namespace bireg {

namespace {

// Collects failures; the first few end up in the detail line.
class Checker {
 public:
  void check(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (failures_ <= 3) first_ += (first_.empty() ? "" : "; ") + what;
  }
  void note(const std::string& s) { notes_ += (notes_.empty() ? "" : ", ") + s; }
  bool pass() const { return failures_ == 0 && checks_ > 0; }
  std::string detail() const {
    std::ostringstream os;
    os << checks_ << " checks";
    if (failures_) os << ", " << failures_ << " failed: " << first_;
    if (!notes_.empty()) os << " (" << notes_ << ")";
    return os.str();
  }

 private:
  long checks_ = 0;
  long failures_ = 0;
  std::string first_;
  std::string notes_;
};

std::vector<Polynomial> polys(const RingPtr& r, std::initializer_list<const char*> gens) {
  std::vector<Polynomial> ps;
  for (auto g : gens) ps.push_back(parse_polynomial(g, r));
  return ps;
}

std::string show(const RegValue& v) {
  switch (v.kind) {
    case RegValue::Kind::kValue: return std::to_string(v.value);
    case RegValue::Kind::kUndefined: return "undefined";
    case RegValue::Kind::kIncomplete: return "incomplete";
  }
  return "?";
}

bool is_bistable_entry(const CorpusEntry& e) { return e.name.find("bistable") != std::string::npos; }

using Entries = std::map<std::pair<int, Bidegree>, long>;

void binomial_end_to_end(Checker& c) {
  Ideal j = pinned_binomial();
  auto b = bigin(j, 3, 20240601);
  RingPtr pr = b.ideal.ring();
  std::vector<Monomial> gens;
  for (const auto& p : polys(pr, {"y2*x1", "y1*x1", "y1^2*x2"})) gens.push_back(p.lead_monomial());
  const MonomialIdeal expected(pr, gens);
  c.check(b.ideal == expected, "bigin mismatch");
  c.check(b.agreed && b.trials.size() == 3, "bigin trials disagree");

  const Entries tj{{{0, {0, 0}}, 1}, {{1, {1, 1}}, 2}, {{2, {2, 2}}, 1}};
  const Entries tb{{{0, {0, 0}}, 1}, {{1, {1, 1}}, 2}, {{1, {1, 2}}, 1}, {{2, {2, 2}}, 1}, {{2, {1, 2}}, 1}};
  auto bj = koszul_betti(j);
  c.check(bj.complete && bj.entries == tj, "Betti table of S/J");
  Ideal bi = Ideal::from_monomials(b.ideal);
  c.check(koszul_betti(bi).entries == tb, "Koszul Betti table of S/bigin");
  c.check(taylor_betti(b.ideal).entries == tb, "Taylor Betti table of S/bigin");

  for (const auto& rep : {reg_via_betti(j), reg_via_s_values(j, 7)}) {
    c.check(rep.reg_x == RegValue::of(0), rep.method + " reg_x(S/J) = " + show(rep.reg_x));
    c.check(rep.reg_y == RegValue::of(0), rep.method + " reg_y(S/J) = " + show(rep.reg_y));
  }
  for (const auto& rep : {reg_via_betti(bi), reg_via_s_values(bi, 7), reg_via_taylor(b.ideal)}) {
    c.check(rep.reg_x == RegValue::of(0), rep.method + " reg_x(S/bigin) = " + show(rep.reg_x));
    c.check(rep.reg_y == RegValue::of(1), rep.method + " reg_y(S/bigin) = " + show(rep.reg_y));
  }
}

void three_way(Checker& c) {
  int bistable = 0;
  int binomial = 0;
  std::uint64_t seed = 1000;
  for (const auto& e : pinned_corpus()) {
    (is_bistable_entry(e) ? bistable : binomial) += 1;
    auto sv = reg_via_s_values(e.ideal, ++seed);
    auto bt = reg_via_betti(e.ideal);
    c.check(sv.reg_x.ok() && sv.reg_x == bt.reg_x, e.name + " reg_x " + show(sv.reg_x) + " vs " + show(bt.reg_x));
    c.check(sv.reg_y.ok() && sv.reg_y == bt.reg_y, e.name + " reg_y " + show(sv.reg_y) + " vs " + show(bt.reg_y));
    if (e.ideal.is_monomial()) {
      auto tt = reg_via_taylor(e.ideal.initial_ideal());
      c.check(tt.reg_x == bt.reg_x && tt.reg_y == bt.reg_y, e.name + " Taylor disagrees");
      c.check(tt.betti && bt.betti && tt.betti->entries == bt.betti->entries, e.name + " Taylor table");
    }
  }
  c.check(bistable >= 20, "fewer than 20 bistable ideals");
  c.check(binomial >= 10, "fewer than 10 binomial ideals");
  c.note(std::to_string(bistable) + " bistable, " + std::to_string(binomial) + " binomial");
}

std::vector<CorpusEntry> bistable_ideals() {
  std::vector<CorpusEntry> out;
  for (const auto& e : pinned_corpus()) {
    if (is_bistable_entry(e)) out.push_back(e);
  }
  for (auto [n, m] : {std::pair{2, 2}, std::pair{3, 3}}) {
    CorpusSpec spec{.seed = static_cast<std::uint64_t>(500 + n), .n = n, .m = m, .max_bidegree = {2, 2},
                    .min_gens = 1, .max_gens = 3, .count = 10, .flavor = Flavor::kBistable};
    for (auto& e : generate(spec)) out.push_back(std::move(e));
  }
  return out;
}

void bistable_reg(Checker& c) {
  int count = 0;
  for (const auto& e : bistable_ideals()) {
    auto mono = e.ideal.initial_ideal();
    c.check(is_bistable(mono), e.name + " not bistable");
    auto mi = m_invariants(mono);
    auto t = koszul_betti(e.ideal);
    c.check(ideal_reg_from_betti(t, Direction::kX) == RegValue::of(mi.mx), e.name + " reg_x(J) != m_x");
    c.check(ideal_reg_from_betti(t, Direction::kY) == RegValue::of(mi.my), e.name + " reg_y(J) != m_y");
    ++count;
  }
  c.note(std::to_string(count) + " ideals");
}

void m_constant(Checker& c) {
  for (const auto& e : bistable_ideals()) {
    auto mono = e.ideal.initial_ideal();
    auto mi = m_invariants(mono);
    const int jmax = mi.my + 3;
    auto t = m_table(mono, jmax);
    for (std::size_t i = 0; i < t.m.size(); ++i) {
      for (int jj = 0; jj <= jmax; ++jj) {
        const int v = t.m[i][static_cast<std::size_t>(jj)];
        c.check(v <= std::max(mi.mx - 1, 0), e.name + " m bound");
        if (jj >= mi.my) c.check(v == t.c[i], e.name + " m not constant at c");
      }
    }
  }
}

void power_theorem(Checker& c) {
  auto sx = Ring::make(2, 0);
  struct Fixture {
    const char* name;
    std::vector<Polynomial> fs;
    bool c_zero;
  };
  std::vector<Fixture> fixtures{{"(x1,x2)", polys(sx, {"x1", "x2"}), true},
                                {"m^2", polys(sx, {"x1^2", "x1*x2", "x2^2"}), true},
                                {"(x1^2,x2^2)", polys(sx, {"x1^2", "x2^2"}), false}};
  for (const auto& f : fixtures) {
    auto th = linearity_threshold_bigin(rees_ideal(f.fs), 3, 4242);
    c.check(th.agreed, std::string(f.name) + " bigin trials disagree");
    auto p = rees_ideal(f.fs);
    auto rx = reg_via_betti(p.j).reg_x;
    c.check(rx == RegValue::of(th.c_bound), std::string(f.name) + " c bound");
    auto table = power_reg_table(f.fs, std::max(th.j0 + 2, 4));
    std::optional<int> cc;
    for (auto [jj, reg] : table.rows) {
      if (jj < th.j0) continue;
      if (!cc) cc = reg - jj * table.d;
      c.check(reg - jj * table.d == *cc, std::string(f.name) + " row " + std::to_string(jj) + " off the line");
    }
    c.check(cc && *cc >= 0 && *cc <= th.c_bound, std::string(f.name) + " c out of range");
    if (f.c_zero) c.check(cc == 0, std::string(f.name) + " c != 0");
    c.note(std::string(f.name) + ": j0=" + std::to_string(th.j0) + " c=" + (cc ? std::to_string(*cc) : "?"));
  }
}

void dseq(Checker& c) {
  int agree = 0;
  int zero = 0;
  for (const auto& e : pinned_corpus()) {
    auto rep = reg_via_betti(e.ideal);
    for (auto dir : {Direction::kX, Direction::kY}) {
      const auto& rv = dir == Direction::kX ? rep.reg_x : rep.reg_y;
      const bool d = generic_forms_d_sequence(e.ideal, dir, 77).report.is_d_sequence;
      c.check(d == (rv == RegValue::of(0)), e.name + (dir == Direction::kX ? " x" : " y") + " d-sequence vs reg");
      agree += d == (rv == RegValue::of(0)) ? 1 : 0;
      zero += rv == RegValue::of(0) ? 1 : 0;
    }
  }
  c.note(std::to_string(zero) + " zero-regularity cases of " + std::to_string(agree));
  auto sx = Ring::make(3, 0);
  for (auto fs : {polys(sx, {"x1", "x2"}), polys(sx, {"x1", "x2", "x3"}), polys(sx, {"x1^2", "x2^2"}),
                  polys(sx, {"x1*x2", "x3^2"})}) {
    c.check(is_d_sequence(fs, Ideal(sx)).is_d_sequence, fs.front().to_string() + ",... not a d-sequence");
    auto p = rees_ideal(fs);
    c.check(reg_via_betti(p.j).reg_y == RegValue::of(0), "reg_y of Rees algebra nonzero");
  }
}

void y_koszul_vanishing(Checker& c) {
  for (const auto& e : pinned_corpus()) {
    const Ring& r = *e.ideal.ring();
    auto rep = reg_via_betti(e.ideal);
    if (!rep.reg_y.ok()) {
      c.check(false, e.name + " reg_y " + show(rep.reg_y));
      continue;
    }
    int amax = 0;
    for (const auto& [k, v] : rep.betti->entries) amax = std::max(amax, k.second.x);
    std::vector<int> yv;
    for (int l = 0; l < r.m(); ++l) yv.push_back(r.y(l));
    KoszulComplex kc(e.ideal, yv, coarse_grading(r));
    for (int extra = 1; extra <= 2; ++extra) {
      const int b = rep.reg_y.value + r.m() + extra;
      for (int a = 0; a <= amax + 2; ++a) {
        bool zero = true;
        for (long h : kc.homology({a, b})) zero = zero && h == 0;
        c.check(zero, e.name + " H at (" + std::to_string(a) + "," + std::to_string(b) + ")");
      }
    }
  }
}

void burch_ci(Checker& c) {
  auto sx = Ring::make(2, 0);
  auto msq = polys(sx, {"x1^2", "x1*x2", "x2^2"});
  auto table = power_reg_table(msq, 5);
  for (std::size_t k = 0; k + 1 < table.rows.size(); ++k) {
    c.check(table.rows[k + 1].second == table.rows[k].second + 2, "m^2 row " + std::to_string(k + 2));
  }
  auto hb = hilbert_burch_analysis(msq);
  c.check(hb.is_codim2_cm && hb.linear_case && hb.threshold == 1, "Hilbert-Burch analysis of m^2");

  auto lin = polys(sx, {"x1", "x2"});
  auto p = rees_ideal(lin);
  c.check(is_complete_intersection(p.j), "Rees ideal of (x1,x2) not a complete intersection");
  std::vector<Bidegree> zs;
  for (const auto& g : p.j.generators()) zs.push_back(std::get<Bidegree>(g.bidegree()));
  const int ci = ci_reg_formula(zs);
  c.check(ci == 0, "ci formula " + std::to_string(ci));
  for (auto [jj, reg] : power_reg_table(lin, 4).rows) c.check(reg == jj + ci, "reg((x1,x2)^j) != j");
}

void veronese(Checker& c) {
  auto check_table = [&](const BettiTable& t, const std::string& name) {
    auto [sx, sy] = veronese_zero_thresholds(t);
    c.check(sx && sy, name + " no zero threshold");
    if (!sx || !sy) return;
    const int top = std::max(*sx, *sy) + 3;
    for (int s = 1; s <= top; ++s) {
      for (int u = 1; u <= top; ++u) {
        auto b = veronese_bound(t, s, u);
        auto bs = veronese_bound(t, s + 1, u);
        auto bt = veronese_bound(t, s, u + 1);
        c.check(*bs.bound_x <= *b.bound_x && *bs.bound_y <= *b.bound_y, name + " not monotone in s");
        c.check(*bt.bound_x <= *b.bound_x && *bt.bound_y <= *b.bound_y, name + " not monotone in t");
        c.check(*b.bound_x >= 0 && *b.bound_y >= 0, name + " negative bound");
        c.check((*b.bound_x == 0) == (s >= *sx), name + " x threshold");
        c.check((*b.bound_y == 0) == (u >= *sy), name + " y threshold");
        c.check(*veronese_bound(t, 2 * s, u).bound_x <= *b.bound_x, name + " doubling");
      }
    }
  };
  int tables = 0;
  for (const auto& e : pinned_corpus()) {
    auto t = koszul_betti(e.ideal);
    if (!t.complete) continue;
    check_table(t, e.name);
    ++tables;
  }
  auto r = Ring::make(1, 1);
  auto t = koszul_betti(Ideal(r, polys(r, {"x1*y1"})));
  auto [sx, sy] = veronese_zero_thresholds(t);
  c.check(sx == 1 && sy == 1, "S/(x1y1) thresholds");
  check_table(t, "S/(x1y1)");
  c.note(std::to_string(tables) + " corpus tables");
}

Polynomial random_form(const RingPtr& r, std::mt19937_64& rng, Bidegree d, int terms) {
  auto pool = monomials_of_bidegree(*r, d);
  std::uniform_int_distribution<long> coeff(-4, 4);
  std::vector<Term> ts;
  for (int k = 0; k < terms; ++k) ts.push_back({r->scalar(coeff(rng)), pool[rng() % pool.size()]});
  return Polynomial(r, ts);
}

Bidegree random_degree(std::mt19937_64& rng) {
  for (;;) {
    Bidegree d{static_cast<int>(rng() % 3), static_cast<int>(rng() % 3)};
    if (d.x + d.y > 0) return d;
  }
}

Ideal random_ideal(const RingPtr& r, std::mt19937_64& rng) {
  std::vector<Polynomial> gens;
  const int count = 1 + static_cast<int>(rng() % 3);
  for (int k = 0; k < count; ++k) {
    Polynomial f = random_form(r, rng, random_degree(rng), 1 + static_cast<int>(rng() % 3));
    if (!f.is_zero()) gens.push_back(f);
  }
  return Ideal(r, gens);
}

void kernel_properties(Checker& c) {
  constexpr int kInstances = 100;
  auto r = Ring::make(2, 2);
  std::mt19937_64 rng(20250101);
  for (int k = 0; k < kInstances; ++k) {
    Ideal j = random_ideal(r, rng);
    const auto& gb = j.groebner();
    c.check(is_groebner_basis(gb), "Buchberger self-check");
    for (const auto& g : j.generators()) c.check(j.contains(g), "generator not in its ideal");
    Polynomial p = random_form(r, rng, {2, 2}, 5) + random_form(r, rng, {3, 1}, 3);
    Polynomial nf = j.normal_form(p);
    c.check(j.normal_form(nf) == nf, "normal form not idempotent");
    c.check(j.contains(p - nf), "p - NF(p) outside J");
    Polynomial f = random_form(r, rng, random_degree(rng), 2);
    if (f.is_zero()) f = Polynomial::variable(r, r->x(0));
    Ideal q = colon(j, f);
    for (const auto& g : q.generators()) c.check(j.contains(g * f), "colon generator fails g f in J");
    c.check(q.contains(j), "J not inside J : f");
  }
  for (int k = 0; k < kInstances; ++k) {
    auto rr = Ring::make(2 + static_cast<int>(k % 2), 2);
    Ideal j = random_ideal(rr, rng);
    std::vector<int> vars;
    for (int v = 0; v < rr->n() + rr->m(); ++v) vars.push_back(v);
    KoszulComplex kc(j, vars, coarse_grading(*rr));
    auto s = kc.strand({1 + static_cast<int>(rng() % 3), 1 + static_cast<int>(rng() % 3)});
    for (std::size_t i = 2; i < s.boundary.size(); ++i) {
      for (const auto& row : s.boundary[i]) {
        SparseRow acc;
        for (const auto& [col, v] : row) axpy(acc, v, s.boundary[i - 1][static_cast<std::size_t>(col)]);
        c.check(acc.empty(), "boundary squares to a nonzero map");
      }
    }
  }
  for (int k = 0; k < kInstances; ++k) {
    Ideal j = random_ideal(r, rng);
    auto b = bigin(j, 1, rng());
    Ideal bj = Ideal::from_monomials(b.ideal);
    for (int a = 0; a <= 3; ++a) {
      for (int bb = 0; bb <= 3; ++bb) {
        c.check(j.quotient_basis({a, bb}).size() == bj.quotient_basis({a, bb}).size(), "bigin changes the Hilbert function");
      }
    }
  }
  c.note(std::to_string(kInstances) + " instances per property");
}

struct Criterion {
  const char* name;
  void (*run)(Checker&);
};

const Criterion kCriteria[] = {
    {"worked binomial example end to end", binomial_end_to_end},
    {"s-values, Koszul and Taylor regularity agree on the pinned corpus", three_way},
    {"bistable ideals: reg_x = m_x and reg_y = m_y", bistable_reg},
    {"m-table bound and stabilization at the generator constant", m_constant},
    {"reg(I^j) = jd + c past the bigin threshold", power_theorem},
    {"generic d-sequence iff zero regularity", dseq},
    {"y-Koszul homology vanishes above reg_y + m", y_koszul_vanishing},
    {"Hilbert-Burch threshold and complete intersection formula", burch_ci},
    {"Veronese bounds: monotone, zero past the thresholds", veronese},
    {"kernel properties on randomized instances", kernel_properties},
};

}  // namespace

CriterionResult run_criterion(int id) {
  if (id < 1 || id > static_cast<int>(std::size(kCriteria))) throw MathError("no criterion " + std::to_string(id));
  const auto& cr = kCriteria[id - 1];
  CriterionResult res;
  res.id = id;
  res.name = cr.name;
  const auto start = std::chrono::steady_clock::now();
  Checker c;
  try {
    cr.run(c);
    res.pass = c.pass();
    res.detail = c.detail();
  } catch (const std::exception& e) {
    res.pass = false;
    res.detail = std::string("exception: ") + e.what();
  }
  res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return res;
}

std::vector<CriterionResult> run_suite(const std::function<void(const CriterionResult&)>& on_result) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= static_cast<int>(std::size(kCriteria)); ++id) {
    out.push_back(run_criterion(id));
    if (on_result) on_result(out.back());
  }
  return out;
}

}  // namespace bireg
