// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "biregkit/regularity.hpp"

namespace bireg {

enum class BlowupKind { kRees, kSymmetric };

struct ReesPresentation {
  std::vector<Polynomial> base;  // f_1..f_m in S_x
  int d = 0;
  Ideal j;  // in K[x_1..x_n, y_1..y_m]
  BlowupKind kind = BlowupKind::kRees;
};

/// Common degree of nonzero homogeneous y-free generators; throws otherwise.
int generator_degree(const std::vector<Polynomial>& fs);

/// Kernel of x_i -> x_i, y_j -> f_j t.
ReesPresentation rees_ideal(const std::vector<Polynomial>& fs);
/// (sum_i b_ij y_i) over a minimal syzygy matrix B of f_1..f_m.
ReesPresentation symmetric_ideal(const std::vector<Polynomial>& fs);
ReesPresentation presentation(const std::vector<Polynomial>& fs, BlowupKind kind);

/// Minimal generators of I^j (products, then a K-basis of their span).
Ideal power_ideal(const Ideal& i, int j);

struct LinearFit {
  int slope = 0;
  int intercept = 0;
  int onset = 0;
};

struct PowerRegularityTable {
  int d = 0;
  BlowupKind kind = BlowupKind::kRees;
  std::vector<std::pair<int, int>> rows;  // (j, reg)
  std::optional<LinearFit> fitted;
};

/// Row j: reg(I^j) directly (Rees) or reg(S^j(I)) from the strand of the
/// symmetric presentation.
PowerRegularityTable power_reg_table(const std::vector<Polynomial>& fs, int jmax, BlowupKind kind = BlowupKind::kRees,
                                     std::uint64_t seed = 1);
/// Slope-d tail reaching the last row, when it covers at least two rows.
std::optional<LinearFit> fit_tail(const std::vector<std::pair<int, int>>& rows, int d);

struct LinearityThreshold {
  int j0 = 0;          // m_y(bigin(J)), 0 for J = 0
  int c_bound = 0;     // reg_x(S/J)
  std::optional<MonomialIdeal> bigin;
  bool agreed = true;
};

LinearityThreshold linearity_threshold_bigin(const ReesPresentation& p, int trials, std::uint64_t seed);

struct MTable {
  // m[i][j] for i in [0, n), j in [0, jmax]
  std::vector<std::vector<int>> m;
  std::vector<int> c;  // stable constants
  int mx = 0;
  int my = 0;
};

MTable m_table(const MonomialIdeal& j, int jmax);

struct WInvariant {
  std::optional<int> w;  // nullopt: empty set
  int b_max = 0;
  bool complete = false;
  std::optional<Polynomial> form;
  std::vector<std::pair<int, Bidegree>> witnesses;  // (i, bidegree) with nonzero kernel
};

/// Largest b with (0 :_{H_i(x; S/J)} l)_{(*,b)} != 0 for some i in [n] and a
/// random (0,1)-form l; scanned for b <= b_max (default reg_y + 2m + 2).
WInvariant w_invariant(const Ideal& j, std::uint64_t seed, std::optional<int> b_max = std::nullopt);

/// max over i of (sum of the i largest x-degrees) - i.
int ci_reg_formula(std::vector<Bidegree> zs);
/// Generators form a regular sequence: codim equals their number.
bool is_complete_intersection(const Ideal& j);
/// Krull dimension of S/J.
int krull_dimension(const Ideal& j);

struct HilbertBurch {
  bool is_codim2_cm = false;
  std::vector<std::vector<Polynomial>> matrix;  // m rows, m-1 columns
  int threshold = 0;
  bool linear_case = false;
  bool linear_type_assumed = true;
};

HilbertBurch hilbert_burch_analysis(const std::vector<Polynomial>& fs);

struct Thresholds {
  LinearityThreshold bigin;
  RegValue reg_x;
  RegValue reg_y;
  WInvariant w;
  int j0_fourth = 0;  // max{reg_y + m, w + m}
  HilbertBurch burch;
};

Thresholds thresholds(const std::vector<Polynomial>& fs, BlowupKind kind, int trials, std::uint64_t seed);

}  // namespace bireg
