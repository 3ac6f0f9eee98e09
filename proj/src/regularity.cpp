// SPDX-License-Identifier: Apache-2.0
#include "biregkit/regularity.hpp"

#include <algorithm>
#include <random>

namespace bireg {

namespace {

std::vector<int> block_of(const Ring& r, Direction dir) {
  std::vector<int> vars;
  if (dir == Direction::kX) {
    for (int i = 0; i < r.n(); ++i) vars.push_back(r.x(i));
  } else {
    for (int l = 0; l < r.m(); ++l) vars.push_back(r.y(l));
  }
  return vars;
}

int block_degree(const Ring& r, const Monomial& z, Direction dir) {
  Bidegree d = r.bidegree(z);
  return dir == Direction::kX ? d.x : d.y;
}

// s-values of the coordinate sequence ending the revlex order: with
// A = in(J) + (killed variables), the colon module ((A : v) / A) has the
// same Hilbert function as its counterpart for J. nullopt when some colon
// module has unbounded support in the block direction.
std::optional<std::vector<int>> coordinate_s_values(const MonomialIdeal& in, const std::vector<int>& block,
                                                    Direction dir) {
  const Ring& r = *in.ring();
  std::vector<int> s;
  MonomialIdeal cur = in;
  for (auto it = block.rbegin(); it != block.rend(); ++it) {
    const Monomial v = Monomial::variable(*it);
    int best = 0;
    const MonomialIdeal quotient = cur.colon(v);
    for (const auto& z : quotient.generators()) {
      if (cur.contains(z)) continue;
      auto sb = cur.colon(z).socle_bound(block);
      if (!sb) return std::nullopt;
      best = std::max(best, block_degree(r, z, dir) + *sb);
    }
    s.push_back(best);
    cur = cur + MonomialIdeal(in.ring(), {v});
  }
  return s;
}

}  // namespace

AlmostRegularCertificate almost_regular_sequence(const Ideal& j, Direction dir, std::uint64_t seed,
                                                 int max_attempts) {
  if (!j.is_bihomogeneous()) throw MathError("almost regular sequences need a bihomogeneous ideal");
  const RingPtr& ring = j.ring();
  const auto block = block_of(*ring, dir);
  AlmostRegularCertificate cert;
  cert.direction = dir;
  if (block.empty()) return cert;
  TermOrder order = dir == Direction::kX ? TermOrder::revlex_x(ring->n(), ring->m(), ring->aux())
                                         : TermOrder::revlex_y(ring->n(), ring->m(), ring->aux());
  std::mt19937_64 master(seed);
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    CoordinateChange g = identity_change(*ring);
    Ideal moved = j;
    if (attempt > 0) {
      g = random_change(*ring, master(), dir == Direction::kX, dir == Direction::kY);
      moved = apply_change(j, g);
    }
    auto s = coordinate_s_values(moved.with_order(order).initial_ideal(), block, dir);
    if (!s) continue;
    CoordinateChange back = invert(g);
    for (auto it = block.rbegin(); it != block.rend(); ++it) {
      Polynomial v = Polynomial::variable(ring, *it);
      cert.forms.push_back(attempt > 0 ? apply_change(v, back) : v);
    }
    cert.s_values = *s;
    cert.bounds = *s;
    cert.change_seed = g.seed;
    cert.randomized = attempt > 0;
    cert.attempts = attempt + 1;
    return cert;
  }
  throw MathError("no almost regular sequence found after " + std::to_string(max_attempts) + " attempts");
}

RegularityReport reg_via_s_values(const Ideal& j, std::uint64_t seed) {
  RegularityReport rep;
  rep.method = "svalues";
  if (j.is_unit()) return rep;
  rep.cert_x = almost_regular_sequence(j, Direction::kX, seed);
  rep.cert_y = almost_regular_sequence(j, Direction::kY, seed ^ 0x5bd1e995ULL);
  auto top = [](const AlmostRegularCertificate& c) {
    int best = 0;
    for (int s : c.s_values) best = std::max(best, s);
    return RegValue::of(best);
  };
  rep.reg_x = top(*rep.cert_x);
  rep.reg_y = top(*rep.cert_y);
  return rep;
}

RegularityReport reg_via_betti(const Ideal& j) {
  RegularityReport rep;
  rep.method = "betti";
  rep.betti = koszul_betti(j);
  rep.reg_x = reg_from_betti(*rep.betti, Direction::kX);
  rep.reg_y = reg_from_betti(*rep.betti, Direction::kY);
  return rep;
}

RegularityReport reg_via_taylor(const MonomialIdeal& j) {
  RegularityReport rep;
  rep.method = "taylor";
  rep.betti = taylor_betti(j);
  rep.reg_x = reg_from_betti(*rep.betti, Direction::kX);
  rep.reg_y = reg_from_betti(*rep.betti, Direction::kY);
  return rep;
}

int graded_regularity(const Ideal& i, std::uint64_t seed) {
  if (i.is_zero()) throw MathError("regularity of the zero ideal");
  for (const auto& f : i.generators()) {
    if (!f.is_bihomogeneous() || std::get<Bidegree>(f.bidegree()).y != 0) {
      throw MathError("graded_regularity needs a homogeneous ideal in the x variables");
    }
  }
  if (i.is_unit()) return 0;
  auto cert = almost_regular_sequence(i, Direction::kX, seed);
  int best = 0;
  for (int s : cert.s_values) best = std::max(best, s);
  return best + 1;
}

DSequenceReport is_d_sequence(const std::vector<Polynomial>& fs, const Ideal& j) {
  const RingPtr& ring = j.ring();
  DSequenceReport rep;
  for (const auto& f : fs) {
    if (f.is_zero()) throw MathError("d-sequence test on a zero element");
    rep.sequence.push_back(f.in_ring(ring));
  }
  const auto& seq = rep.sequence;
  const int nv = ring->n() + ring->m();
  rep.minimal_generation = true;
  for (std::size_t i = 0; i < seq.size() && rep.minimal_generation; ++i) {
    std::vector<Polynomial> gens = j.generators();
    for (std::size_t k = 0; k < seq.size(); ++k) {
      if (k != i) gens.push_back(seq[k]);
    }
    for (int v = 0; v < nv; ++v) gens.push_back(seq[i] * Polynomial::variable(ring, v));
    if (Ideal(ring, gens).contains(seq[i])) rep.minimal_generation = false;
  }
  std::vector<Polynomial> all = j.generators();
  all.insert(all.end(), seq.begin(), seq.end());
  const Ideal whole(ring, all);
  std::vector<Polynomial> prefix = j.generators();
  bool ok = rep.minimal_generation;
  for (const auto& f : seq) {
    Ideal p(ring, prefix);
    bool cond = p.contains(intersect(colon(p, f), whole));
    rep.colon_condition.push_back(cond);
    ok = ok && cond;
    prefix.push_back(f);
  }
  rep.is_d_sequence = ok;
  return rep;
}

GenericDSequence generic_forms_d_sequence(const Ideal& j, Direction dir, std::uint64_t seed) {
  GenericDSequence out{{}, almost_regular_sequence(j, dir, seed)};
  std::vector<Polynomial> gens = j.generators();
  std::vector<Polynomial> chosen;
  for (const auto& f : out.coordinates.forms) {
    if (Ideal(j.ring(), gens).contains(f)) continue;
    chosen.push_back(f);
    gens.push_back(f);
  }
  out.report = is_d_sequence(chosen, j);
  return out;
}

}  // namespace bireg
