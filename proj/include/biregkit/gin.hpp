// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "biregkit/groebner.hpp"

namespace bireg {

class ConsensusError : public std::runtime_error {
 public:
  ConsensusError(const std::string& what, std::vector<std::vector<std::string>> trials)
      : std::runtime_error(what), trials_(std::move(trials)) {}
  const std::vector<std::vector<std::string>>& trials() const { return trials_; }

 private:
  std::vector<std::vector<std::string>> trials_;
};

using Matrix = std::vector<std::vector<Scalar>>;

Matrix identity_matrix(int k, const Field& f);
Scalar determinant(Matrix a);
Matrix inverse(Matrix a);

/// x_j -> sum_i d[i][j] x_i and y_l -> sum_k e[k][l] y_k.
struct CoordinateChange {
  Matrix d;
  Matrix e;
  std::uint64_t seed = 0;
};

CoordinateChange identity_change(const Ring& ring);
/// Entries uniform in [-bound, bound] (uniform residues over Fp), redrawn
/// until both blocks are invertible. `x_block` / `y_block` false keeps identity.
CoordinateChange random_change(const Ring& ring, std::uint64_t seed, bool x_block = true, bool y_block = true,
                               long bound = 1000000);

Polynomial apply_change(const Polynomial& p, const CoordinateChange& g);
Ideal apply_change(const Ideal& j, const CoordinateChange& g);
/// The inverse substitution.
CoordinateChange invert(const CoordinateChange& g);

struct BiginTrial {
  std::uint64_t seed;
  MonomialIdeal ideal;
};

struct BiginResult {
  MonomialIdeal ideal;
  std::vector<BiginTrial> trials;
  bool agreed = false;
};

/// in(gJ) under the default bigraded order for `trials` random g; the majority ideal is
/// returned. Throws ConsensusError when no two trials agree.
BiginResult bigin(const Ideal& j, int trials, std::uint64_t seed);

bool is_bistable(const MonomialIdeal& j);
bool is_strongly_bistable(const MonomialIdeal& j);

struct MInvariants {
  int mx = 0;
  int my = 0;
};
MInvariants m_invariants(const MonomialIdeal& j);

/// I_v in S_x, from generators whose y-part divides y^v.
MonomialIdeal restrict_to_ydeg(const MonomialIdeal& j, const std::vector<int>& v);

/// Index of the last x-variable dividing z, or -1 (0-based).
int max_x_index(const Ring& ring, const Monomial& z);
int max_y_index(const Ring& ring, const Monomial& z);

}  // namespace bireg
