// SPDX-License-Identifier: Apache-2.0
#include "biregkit/veronese.hpp"

#include <algorithm>

namespace bireg {

int ceil_div(int a, int b) {
  int q = a / b;
  if ((a % b != 0) && ((a > 0) == (b > 0))) ++q;
  return q;
}

VeroneseBound veronese_bound(const BettiTable& table, int s, int t) {
  if (!table.complete) throw MathError("Veronese bound needs a complete Betti table");
  if (s < 0 || t < 0 || (s == 0 && t == 0)) throw MathError("Veronese step must be nonnegative and not (0,0)");
  VeroneseBound out;
  out.s = s;
  out.t = t;
  for (const auto& [key, b] : table.entries) {
    const auto& [i, d] = key;
    if (s > 0) {
      int v = ceil_div(d.x, s) - i;
      if (!out.bound_x || v > *out.bound_x) {
        out.bound_x = v;
        out.witness_x = BettiWitness{i, d};
      }
    }
    if (t > 0) {
      int v = ceil_div(d.y, t) - i;
      if (!out.bound_y || v > *out.bound_y) {
        out.bound_y = v;
        out.witness_y = BettiWitness{i, d};
      }
    }
  }
  return out;
}

std::pair<std::optional<int>, std::optional<int>> veronese_zero_thresholds(const BettiTable& table) {
  if (!table.complete) throw MathError("Veronese thresholds need a complete Betti table");
  // ceil(a/s) <= i  iff  s >= ceil(a/i) for i >= 1; an i = 0 entry needs a = 0.
  auto scan = [&](bool x) -> std::optional<int> {
    int need = 1;
    for (const auto& [key, b] : table.entries) {
      const int a = x ? key.second.x : key.second.y;
      const int i = key.first;
      if (i == 0) {
        if (a > 0) return std::nullopt;
        continue;
      }
      need = std::max(need, ceil_div(a, i));
    }
    return need;
  };
  return {scan(true), scan(false)};
}

}  // namespace bireg
