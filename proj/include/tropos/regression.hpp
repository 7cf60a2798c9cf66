#pragma once

#include <string>
#include <vector>

namespace tropos {

struct RegressionResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

// Recomputes every worked example with a known exact answer and compares.
// Exceptions inside a check count as failures.
std::vector<RegressionResult> run_regression_suite();

}  // namespace tropos
