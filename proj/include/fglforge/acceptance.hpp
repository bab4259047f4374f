#pragma once

// The end-to-end acceptance suite behind `selftest`. Criterion 10 (CLI
// determinism) needs a separate process and is run by the test driver.

#include <string>
#include <vector>

namespace fglforge {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;      // deterministic; empty on success
  double seconds = 0;      // wall time, not part of any stable output
  double limit_seconds = 0;  // 0: no limit
};

/// Criteria 1-9 in order. A criterion whose time limit is exceeded fails.
std::vector<CriterionResult> run_acceptance();
CriterionResult run_criterion(int id);

}  // namespace fglforge
