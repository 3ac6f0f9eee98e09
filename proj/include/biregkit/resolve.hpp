// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <optional>
#include <unordered_map>
#include <vector>

#include "biregkit/groebner.hpp"
#include "biregkit/linalg.hpp"

namespace bireg {

/// Integer weight rows; the first two are always the x- and y-degree.
struct Grading {
  std::vector<std::vector<int>> rows;
  std::vector<int> degree(const Monomial& z) const;
  Bidegree bidegree(const std::vector<int>& c) const { return {c[0], c[1]}; }
};

/// Bidegree only.
Grading coarse_grading(const Ring& ring);
/// Finest torus grading for which every generator is homogeneous.
Grading fine_grading(const Ideal& j);

struct VectorHash {
  std::size_t operator()(const std::vector<int>& v) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (int e : v) h = (h ^ static_cast<std::size_t>(e + 0x9e3779b9)) * 1099511628211ULL;
    return h;
  }
};

struct KoszulCell {
  std::uint32_t wedge;  // bitmask over the positions in `vars`
  Monomial mono;
};

/// One graded strand of the Koszul complex on `vars` with coefficients in S/J.
struct KoszulStrand {
  std::vector<std::vector<KoszulCell>> cells;  // by homological index
  std::vector<std::vector<SparseRow>> boundary;  // boundary[i][k] = image of cells[i][k] in index i-1
};

class KoszulComplex {
 public:
  KoszulComplex(Ideal j, std::vector<int> vars, Grading grading);

  KoszulStrand strand(const std::vector<int>& c);
  /// dim H_i for i = 0..|vars| at grading degree c.
  std::vector<long> homology(const std::vector<int>& c);
  const Grading& grading() const { return grading_; }
  const Ideal& ideal() const { return j_; }
  const std::vector<int>& vars() const { return vars_; }
  /// Normal form of a monomial as coordinates over standard monomials.
  const Polynomial& reduce_monomial(const Monomial& z);
  const std::vector<Monomial>& standard(const std::vector<int>& c);

 private:
  Ideal j_;
  MonomialIdeal in_;
  std::vector<int> vars_;
  Grading grading_;
  std::map<Bidegree, std::unordered_map<std::vector<int>, std::vector<Monomial>, VectorHash>> standard_;
  std::unordered_map<Monomial, Polynomial, MonomialHash> nf_;
};

struct BettiTable {
  std::map<std::pair<int, Bidegree>, long> entries;
  std::optional<Bidegree> box;
  bool complete = true;

  bool empty() const { return entries.empty(); }
  long at(int i, Bidegree d) const {
    auto it = entries.find({i, d});
    return it == entries.end() ? 0 : it->second;
  }
  friend bool operator==(const BettiTable& a, const BettiTable& b) { return a.entries == b.entries; }
};

/// Graded Betti numbers of S/J: ranks of Koszul strands at every degree that
/// can carry a Betti number (read off the lcm lattice of in(J)). `box` drops
/// bidegrees outside it and clears `complete` when something was dropped.
BettiTable koszul_betti(const Ideal& j, std::optional<Bidegree> box = std::nullopt);
/// Multigraded version for monomial ideals, keyed by multidegree.
std::map<std::pair<int, Monomial>, long> multigraded_betti(const MonomialIdeal& j);

/// Taylor complex of G(J), minimalized by cancelling unit entries. A nonzero
/// `pivot_seed` picks pivots in a random order.
BettiTable taylor_betti(const MonomialIdeal& j, std::uint64_t pivot_seed = 0);

struct RegValue {
  enum class Kind { kValue, kUndefined, kIncomplete };
  Kind kind = Kind::kUndefined;
  int value = 0;
  bool ok() const { return kind == Kind::kValue; }
  friend bool operator==(const RegValue&, const RegValue&) = default;
  static RegValue of(int v) { return {Kind::kValue, v}; }
};

enum class Direction { kX, kY };

/// Regularity of the module whose table this is.
RegValue reg_from_betti(const BettiTable& t, Direction dir);
/// Regularity of J read off the table of S/J (indices shifted by one).
RegValue ideal_reg_from_betti(const BettiTable& t, Direction dir);

/// Betti table over S_x of the strand (S/J)_{(*,j)}; keys use bidegree (a, j).
BettiTable strand_betti(const Ideal& j, int ydeg);
/// reg of (S/J)_{(*,j)} as a graded S_x-module.
RegValue strand_regularity(const Ideal& j, int ydeg);

}  // namespace bireg
