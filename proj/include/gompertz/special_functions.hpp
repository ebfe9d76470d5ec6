#pragma once

namespace gompertz::special {

/// Tolerances for the series / continued-fraction evaluations below.
struct SpecialFnConfig {
  double rel_tol = 1e-14;
  int max_iter = 500;
};

/// Natural log of the gamma function for z > 0 (Lanczos approximation,
/// reflection formula below z = 0.5).
double log_gamma(double z);

/// Exponential integral Ei(x) for strictly negative x.
///
/// Evaluated as -E1(-x): power series for -x <= 1, modified Lentz
/// continued fraction for -x > 1. Always negative on this branch.
/// Throws std::domain_error for x >= 0 or non-finite x.
double exp_integral_ei(double x, const SpecialFnConfig& cfg = {});

/// Upper incomplete gamma function for s > 0, x > 0.
///
/// Series for the regularized lower function when x < s + 1, continued
/// fraction otherwise. Results that underflow below the smallest positive
/// normal double are flushed to 0 without error; use the log companion
/// when the exp(q) compensation in the KL closed form is in play.
double upper_incomplete_gamma(double s, double x, const SpecialFnConfig& cfg = {});

// Log-space companions. These stay finite where the plain values underflow,
// so products like exp(q) * Gamma(s, q) can be assembled as exp of a sum.
double log_abs_exp_integral_ei(double x, const SpecialFnConfig& cfg = {});
double log_upper_incomplete_gamma(double s, double x, const SpecialFnConfig& cfg = {});

}  // namespace gompertz::special
