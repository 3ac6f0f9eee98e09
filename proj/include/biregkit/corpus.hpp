// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "biregkit/groebner.hpp"

namespace bireg {

enum class Flavor { kBistable, kStronglyBistable, kBinomial, kGeneric, kEquigeneratedX };

Flavor parse_flavor(const std::string& name);
std::string flavor_name(Flavor f);

struct CorpusSpec {
  std::uint64_t seed = 1;
  int n = 2;
  int m = 2;
  Bidegree max_bidegree{2, 2};
  int min_gens = 1;
  int max_gens = 3;
  int count = 10;
  Flavor flavor = Flavor::kBistable;
  int degree = 2;  // equigenerated-x only
  Field field = Field::rationals();
};

struct CorpusEntry {
  std::string name;
  Ideal ideal;
};

/// Deterministic in the spec.
std::vector<CorpusEntry> generate(const CorpusSpec& spec);

/// Closure of the given monomials under the exchange moves.
MonomialIdeal bistable_closure(const RingPtr& ring, std::vector<Monomial> seeds, bool strong);

/// The binomial ideal (y2 x2 - y1 x3, y3 x1 - y1 x3) with n = m = 3.
Ideal pinned_binomial(Field field = Field::rationals());

/// Fixed corpus used by the acceptance battery: at least 20 bistable and
/// 10 binomial ideals with n, m <= 3 and generator degree <= 4.
std::vector<CorpusEntry> pinned_corpus();

}  // namespace bireg
