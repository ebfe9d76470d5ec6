#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "gompertz/distribution.hpp"

namespace gompertz::evt {

/// Gumbel distribution for sample minima (type I extreme value),
/// support (-inf, inf).
struct GumbelMinParams {
  double location;  // m
  double scale;     // s > 0
  GumbelMinParams(double m, double s);
};

/// Frechet distribution (type II extreme value), support (0, inf).
struct FrechetParams {
  double shape;  // a > 0
  double scale;  // r > 0
  FrechetParams(double a, double r);
};

/// Weibull distribution (type III extreme value), support [0, inf).
struct WeibullParams {
  double shape;  // k > 0
  double scale;  // l > 0
  WeibullParams(double k, double l);
};

// Parameter maps onto the Gompertz (b, q) pair.
GompertzParams to_gompertz(const GumbelMinParams& g);  // b = 1/s, q = e^{-m/s}
GompertzParams to_gompertz(const FrechetParams& f);    // b = a,   q = r^a
GompertzParams to_gompertz(const WeibullParams& w);    // b = k,   q = l^{-k}

// Densities of the base distributions, evaluated from their own formulas.
double base_pdf(const GumbelMinParams& g, double x);
double base_pdf(const FrechetParams& f, double x);
double base_pdf(const WeibullParams& w, double x);

// Density of the monotone-transformed variable: identity for Gumbel-min,
// y = -ln x for Frechet, y = ln x for Weibull. Computed by the
// change-of-variables rule from base_pdf, not from the Gompertz density.
double transformed_pdf(const GumbelMinParams& g, double y);
double transformed_pdf(const FrechetParams& f, double y);
double transformed_pdf(const WeibullParams& w, double y);

/// Gumbel-min density in (b, q) form, b q e^{bx} e^{-q e^{bx}}, on all of R.
/// Multiplying by e^q on x >= 0 recovers the Gompertz density.
double gumbel_reparam_pdf(const GompertzParams& p, double x);

struct RejectionSample {
  std::vector<double> values;
  std::uint64_t base_draws = 0;
};

// Draw from the base law by inverting its own CDF, apply the transform,
// and keep values >= 0 until n are accepted. The accepted values follow
// the Gompertz law under the corresponding parameter map; the expected
// acceptance rate is e^{-q}. Throws std::runtime_error when e^{-q} < 1e-6
// (the loop would be effectively unbounded).
RejectionSample truncated_transform_sample(const GumbelMinParams& g,
                                           std::size_t n, std::uint64_t seed);
RejectionSample truncated_transform_sample(const FrechetParams& f,
                                           std::size_t n, std::uint64_t seed);
RejectionSample truncated_transform_sample(const WeibullParams& w,
                                           std::size_t n, std::uint64_t seed);

// Run exactly n_base base draws and report how many survive truncation,
// for checking the empirical acceptance rate against e^{-q}.
std::uint64_t count_accepted(const GumbelMinParams& g, std::uint64_t n_base,
                             std::uint64_t seed);
std::uint64_t count_accepted(const FrechetParams& f, std::uint64_t n_base,
                             std::uint64_t seed);
std::uint64_t count_accepted(const WeibullParams& w, std::uint64_t n_base,
                             std::uint64_t seed);

}  // namespace gompertz::evt
