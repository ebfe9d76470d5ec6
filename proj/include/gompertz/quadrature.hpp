#pragma once

#include <cstdint>
#include <functional>
#include <span>

namespace gompertz::quad {

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  std::uint64_t evaluations = 0;
};

/// Adaptive Gauss-Kronrod (7/15) integration of f over [a, inf).
///
/// The half line is mapped to [0, 1) through t = a + u / (1 - u) and the
/// panel with the largest embedded error estimate is bisected until
/// error_estimate <= rel_tol * max(|value|, 1e-300). Panel contributions
/// are summed in a fixed left-to-right order so results are reproducible.
///
/// Throws std::domain_error if rel_tol is outside [1e-13, 1e-4] or an
/// integrand sample is non-finite, std::runtime_error if the evaluation
/// budget is exhausted first.
QuadratureResult integrate_semi_infinite(const std::function<double(double)>& f,
                                         double a, double rel_tol,
                                         std::uint64_t max_evals = 1'000'000);

/// Same adaptive scheme on a finite interval [a, b].
QuadratureResult integrate_finite(const std::function<double(double)>& f,
                                  double a, double b, double rel_tol,
                                  std::uint64_t max_evals = 1'000'000);

/// Kolmogorov-Smirnov distance between the empirical CDF of a sorted sample
/// and a reference CDF: sup_i max(|i/n - F(x_i)|, |(i-1)/n - F(x_i)|).
double ks_distance(std::span<const double> sorted_samples,
                   const std::function<double(double)>& cdf);

}  // namespace gompertz::quad
