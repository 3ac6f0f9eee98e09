// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <utility>
#include <vector>

#include "biregkit/field.hpp"

namespace bireg {

/// Sparse vector: (column, nonzero value), strictly increasing columns.
using SparseRow = std::vector<std::pair<int, Scalar>>;

/// r += c * s
void axpy(SparseRow& r, const Scalar& c, const SparseRow& s);

/// Incremental row echelon form keyed by leading column.
class Echelon {
 public:
  /// Reduces `r` until its leading column carries no pivot.
  void reduce(SparseRow& r) const;
  /// Adds `r`; false when it was in the span already.
  bool insert(SparseRow r);
  bool in_span(SparseRow r) const {
    reduce(r);
    return r.empty();
  }
  std::size_t rank() const { return pivots_.size(); }

 private:
  std::map<int, SparseRow> pivots_;
};

std::size_t rank(const std::vector<SparseRow>& rows);

/// Basis of {c : sum_k c_k images[k] = 0}; `width` bounds image columns.
std::vector<SparseRow> kernel(const std::vector<SparseRow>& images, int width, const Field& field);

}  // namespace bireg
