#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gompertz::selfcheck {

struct CheckResult {
  std::string name;
  double statistic;  // measured value, compared against limit
  double limit;
  bool pass;         // statistic <= limit
};

struct CheckOptions {
  std::uint64_t seed = 42;
  double perturb = 0.0;  // negative-control hook: scales one closed-form input
  std::string only;      // run only checks whose name contains this substring
};

/// Run the numerical self-verification suite: the closed-form KL against
/// its quadrature oracle on a parameter grid, the extreme-value
/// characterizations, the growth decomposition identity, core distribution
/// properties, and the special functions against their defining integrals.
std::vector<CheckResult> run_checks(const CheckOptions& opts = {});

}  // namespace gompertz::selfcheck
