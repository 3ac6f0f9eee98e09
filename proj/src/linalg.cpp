// SPDX-License-Identifier: Apache-2.0
#include "biregkit/linalg.hpp"

namespace bireg {

void axpy(SparseRow& r, const Scalar& c, const SparseRow& s) {
  if (c.is_zero()) return;
  SparseRow out;
  out.reserve(r.size() + s.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < r.size() || j < s.size()) {
    if (j == s.size() || (i < r.size() && r[i].first < s[j].first)) {
      out.push_back(std::move(r[i++]));
    } else if (i == r.size() || s[j].first < r[i].first) {
      out.emplace_back(s[j].first, c * s[j].second);
      ++j;
    } else {
      Scalar v = std::move(r[i].second);
      v += c * s[j].second;
      if (!v.is_zero()) out.emplace_back(r[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  r = std::move(out);
}

void Echelon::reduce(SparseRow& r) const {
  while (!r.empty()) {
    auto it = pivots_.find(r.front().first);
    if (it == pivots_.end()) return;
    Scalar c = -r.front().second;
    axpy(r, c, it->second);
  }
}

bool Echelon::insert(SparseRow r) {
  reduce(r);
  if (r.empty()) return false;
  Scalar inv = r.front().second.inverse();
  for (auto& [col, v] : r) v *= inv;
  int lead = r.front().first;
  pivots_.emplace(lead, std::move(r));
  return true;
}

std::size_t rank(const std::vector<SparseRow>& rows) {
  Echelon e;
  for (const auto& r : rows) e.insert(r);
  return e.rank();
}

std::vector<SparseRow> kernel(const std::vector<SparseRow>& images, int width, const Field& field) {
  Echelon e;
  std::vector<SparseRow> out;
  const Scalar one = Scalar::one(field);
  for (std::size_t k = 0; k < images.size(); ++k) {
    SparseRow r = images[k];
    r.emplace_back(width + static_cast<int>(k), one);
    e.reduce(r);
    if (r.front().first >= width) {
      SparseRow v;
      for (auto& [col, c] : r) v.emplace_back(col - width, c);
      out.push_back(std::move(v));
    } else {
      e.insert(std::move(r));
    }
  }
  return out;
}

}  // namespace bireg
