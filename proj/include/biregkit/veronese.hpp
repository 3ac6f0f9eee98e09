// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <utility>

#include "biregkit/resolve.hpp"

namespace bireg {

struct BettiWitness {
  int i = 0;
  Bidegree degree;
};

/// Upper bounds for the regularities of the (s,t)-Veronese of S/J read off
/// a complete Betti table of S/J. A zero component disables that direction.
struct VeroneseBound {
  int s = 0;
  int t = 0;
  std::optional<int> bound_x;
  std::optional<int> bound_y;
  std::optional<BettiWitness> witness_x;
  std::optional<BettiWitness> witness_y;
};

int ceil_div(int a, int b);

VeroneseBound veronese_bound(const BettiTable& table, int s, int t);

/// Smallest s* (t*) with bound_x <= 0 (bound_y <= 0) for every s >= s*;
/// nullopt when no s works.
std::pair<std::optional<int>, std::optional<int>> veronese_zero_thresholds(const BettiTable& table);

}  // namespace bireg
