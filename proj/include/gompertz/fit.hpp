#pragma once

#include <span>

#include "gompertz/distribution.hpp"

namespace gompertz {

struct FitConfig {
  double ln_b_tol = 1e-9;   // absolute tolerance on the ln(b) bracket width
  int max_iterations = 200; // golden-section iterations
  int max_expansions = 60;  // bracket expansions (factor 4 per step)
};

struct FitResult {
  GompertzParams params;
  double log_likelihood;
  int iterations;
  bool converged;
  double bracket_lo;  // final search interval in b
  double bracket_hi;
};

/// Full log likelihood of the data under the given parameters.
double log_likelihood(std::span<const double> data, const GompertzParams& p);

/// Profile maximum-likelihood fit of (b, q).
///
/// The stationarity condition in q gives q(b) = n / sum(e^{b x_i} - 1)
/// exactly, reducing the problem to a 1-D maximization over ln b, solved
/// by golden-section search on an auto-expanded bracket around
/// b0 = 1/mean(data). Values of b that overflow the profile sum are
/// treated as -inf and act as bracket walls.
///
/// Requires n >= 2 finite nonnegative observations, not all zero.
FitResult fit_mle(std::span<const double> data, const FitConfig& cfg = {});

}  // namespace gompertz
