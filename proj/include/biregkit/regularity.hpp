// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "biregkit/gin.hpp"
#include "biregkit/resolve.hpp"

namespace bireg {

struct AlmostRegularCertificate {
  Direction direction = Direction::kX;
  /// Linear forms in order; s_values[i] belongs to forms[i].
  std::vector<Polynomial> forms;
  std::vector<int> s_values;
  /// Degree past which the i-th colon module vanishes; equals s_values[i]
  /// here since supports are computed exactly.
  std::vector<int> bounds;
  /// 0 when the coordinate sequence itself was used.
  std::uint64_t change_seed = 0;
  bool randomized = false;
  int attempts = 1;
};

/// Almost regular sequence of (1,0)-forms (or (0,1)-forms) for S/J with its
/// s-values. The coordinate sequence x_n..x_1 (resp. y_m..y_1) is tried first,
/// then random changes of that block drawn from `seed`.
AlmostRegularCertificate almost_regular_sequence(const Ideal& j, Direction dir, std::uint64_t seed,
                                                 int max_attempts = 20);

struct RegularityReport {
  RegValue reg_x;
  RegValue reg_y;
  std::string method;
  std::optional<AlmostRegularCertificate> cert_x;
  std::optional<AlmostRegularCertificate> cert_y;
  std::optional<BettiTable> betti;
};

RegularityReport reg_via_s_values(const Ideal& j, std::uint64_t seed);
RegularityReport reg_via_betti(const Ideal& j);
/// Monomial input only.
RegularityReport reg_via_taylor(const MonomialIdeal& j);

/// Castelnuovo-Mumford regularity of a nonzero homogeneous ideal I in x only.
int graded_regularity(const Ideal& i, std::uint64_t seed = 1);

struct DSequenceReport {
  std::vector<Polynomial> sequence;
  bool minimal_generation = false;
  std::vector<bool> colon_condition;
  bool is_d_sequence = false;
};

/// d-sequence test for the images of `fs` in S/J.
DSequenceReport is_d_sequence(const std::vector<Polynomial>& fs, const Ideal& j);

struct GenericDSequence {
  DSequenceReport report;
  AlmostRegularCertificate coordinates;
};

/// Runs is_d_sequence on a minimal system of (1,0)- or (0,1)-forms taken
/// along an almost regular coordinate sequence.
GenericDSequence generic_forms_d_sequence(const Ideal& j, Direction dir, std::uint64_t seed);

}  // namespace bireg
