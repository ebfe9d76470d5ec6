#pragma once

#include <cmath>
#include <limits>
#include <string>
#include <vector>

// Relative difference on the larger magnitude; values that both underflow
// compare equal.
inline double rel_err(double got, double want) {
  const double scale = std::max(std::abs(got), std::abs(want));
  if (scale < std::numeric_limits<double>::min()) return 0.0;
  return std::abs(got - want) / scale;
}

inline std::vector<double> test_linspace(double lo, double hi, int n) {
  std::vector<double> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) out.push_back(lo + (hi - lo) * i / (n - 1));
  return out;
}

inline std::vector<double> test_logspace(double lo, double hi, int n) {
  std::vector<double> out;
  out.reserve(n);
  const double llo = std::log(lo), lhi = std::log(hi);
  for (int i = 0; i < n; ++i) out.push_back(std::exp(llo + (lhi - llo) * i / (n - 1)));
  return out;
}

// Path to the CLI binary, filled from --cli-path= by the test main.
extern std::string g_cli_path;
