#pragma once

#include <span>
#include <vector>

#include "gompertz/distribution.hpp"

namespace gompertz {

/// One row of the subtractive decomposition f = f_g - f_d, where
/// f_g = b q e^{bx} is the growth propensity and f_d = f_g F(x) the
/// decline propensity. f equals the density by construction.
struct DecompositionPoint {
  double x;
  double f_g;
  double f_d;
  double f;
};

/// Evaluate the decomposition on a grid of nonnegative points.
std::vector<DecompositionPoint> decompose(const GompertzParams& p,
                                          std::span<const double> xs);

}  // namespace gompertz
