#pragma once

#include <string>
#include <vector>

namespace stokes {

struct CheckResult {
  std::string name;
  bool ok = false;
  std::string detail;  // empty on success, first failure otherwise
};

// Randomized cross-module invariant checks. Deterministic in (seed, trials);
// every check runs even after a failure so the report is complete.
std::vector<CheckResult> run_checks(unsigned long seed, int trials);

}  // namespace stokes
