// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <string>
#include <vector>

namespace bireg {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

/// Runs criterion `id` (1..10) of the acceptance battery.
CriterionResult run_criterion(int id);

/// All criteria in order; `on_result` fires as each one finishes.
std::vector<CriterionResult> run_suite(const std::function<void(const CriterionResult&)>& on_result = {});

}  // namespace bireg
