#include "gompertz/special_functions.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

namespace gompertz::special {

namespace {

constexpr double kEulerGamma = 0.57721566490153286061;
constexpr double kHalfLog2Pi = 0.91893853320467274178;
constexpr double kTiny = 1e-300;

void check_config(const SpecialFnConfig& cfg) {
  if (!(cfg.rel_tol > 0.0) || !(cfg.rel_tol < 1e-6)) {
    throw std::domain_error("SpecialFnConfig: rel_tol must lie in (0, 1e-6)");
  }
  if (cfg.max_iter < 50) {
    throw std::domain_error("SpecialFnConfig: max_iter must be at least 50");
  }
}

[[noreturn]] void fail_domain(const char* fn, const char* what, double v) {
  char buf[128];
  std::snprintf(buf, sizeof buf, "%s: %s, got %g", fn, what, v);
  throw std::domain_error(buf);
}

// E1(z) for 0 < z <= 1 via the power series
// E1(z) = -gamma - ln z + sum_{k>=1} (-1)^{k+1} z^k / (k k!).
double e1_series(double z, const SpecialFnConfig& cfg) {
  double sum = 0.0;
  double term = z;  // k = 1
  for (int k = 1; k <= cfg.max_iter; ++k) {
    sum += term;
    if (std::abs(term) < cfg.rel_tol * std::abs(sum)) {
      return -kEulerGamma - std::log(z) + sum;
    }
    term *= -z * k / (static_cast<double>(k + 1) * (k + 1));
  }
  throw std::runtime_error("exp_integral_ei: series did not converge");
}

// Modified Lentz continued fraction for z > 1. Returns h with
// E1(z) = h * exp(-z), so callers can stay in log space.
double e1_cf_prefactor(double z, const SpecialFnConfig& cfg) {
  double b = z + 1.0;
  double c = 1.0 / kTiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= cfg.max_iter; ++i) {
    const double a = -static_cast<double>(i) * i;
    b += 2.0;
    d = a * d + b;
    if (std::abs(d) < kTiny) d = kTiny;
    c = b + a / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < cfg.rel_tol) return h;
  }
  throw std::runtime_error("exp_integral_ei: continued fraction did not converge");
}

// Regularized lower incomplete gamma P(s, x) by series, for x < s + 1.
double gamma_p_series(double s, double x, const SpecialFnConfig& cfg) {
  double ap = s;
  double sum = 1.0 / s;
  double del = sum;
  for (int i = 0; i < cfg.max_iter; ++i) {
    ap += 1.0;
    del *= x / ap;
    sum += del;
    if (std::abs(del) < std::abs(sum) * cfg.rel_tol) {
      return sum * std::exp(-x + s * std::log(x) - log_gamma(s));
    }
  }
  throw std::runtime_error("upper_incomplete_gamma: series did not converge");
}

// Continued fraction prefactor h with Gamma(s, x) = h * exp(-x + s ln x),
// valid for x >= s + 1.
double gamma_q_cf_prefactor(double s, double x, const SpecialFnConfig& cfg) {
  double b = x + 1.0 - s;
  double c = 1.0 / kTiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= cfg.max_iter; ++i) {
    const double an = -static_cast<double>(i) * (i - s);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < kTiny) d = kTiny;
    c = b + an / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < cfg.rel_tol) return h;
  }
  throw std::runtime_error("upper_incomplete_gamma: continued fraction did not converge");
}

void check_gamma_args(double s, double x) {
  if (!std::isfinite(s) || s <= 0.0) {
    fail_domain("upper_incomplete_gamma", "s must be positive and finite", s);
  }
  if (!std::isfinite(x) || x <= 0.0) {
    fail_domain("upper_incomplete_gamma", "x must be positive and finite", x);
  }
}

void check_ei_arg(double x) {
  if (!std::isfinite(x) || x >= 0.0) {
    fail_domain("exp_integral_ei", "x must be negative and finite", x);
  }
}

}  // namespace

double log_gamma(double z) {
  if (!std::isfinite(z) || z <= 0.0) {
    fail_domain("log_gamma", "z must be positive and finite", z);
  }
  // reflection for small arguments keeps the Lanczos sum well conditioned
  if (z < 0.5) {
    return std::log(M_PI / std::sin(M_PI * z)) - log_gamma(1.0 - z);
  }
  static constexpr double kLanczos[9] = {
      0.99999999999980993,
      676.5203681218851,
      -1259.1392167224028,
      771.32342877765313,
      -176.61502916214059,
      12.507343278686905,
      -0.13857109526572012,
      9.9843695780195716e-6,
      1.5056327351493116e-7,
  };
  const double zm1 = z - 1.0;
  double x = kLanczos[0];
  for (int i = 1; i < 9; ++i) {
    x += kLanczos[i] / (zm1 + i);
  }
  const double t = zm1 + 7.5;  // g + 0.5 with g = 7
  return kHalfLog2Pi + std::fma(zm1 + 0.5, std::log(t), -t) + std::log(x);
}

double exp_integral_ei(double x, const SpecialFnConfig& cfg) {
  check_config(cfg);
  check_ei_arg(x);
  const double z = -x;
  if (z <= 1.0) {
    return -e1_series(z, cfg);
  }
  const double v = e1_cf_prefactor(z, cfg) * std::exp(-z);
  // underflow policy: flush subnormal magnitudes to (signed) zero
  if (v < std::numeric_limits<double>::min()) return -0.0;
  return -v;
}

double log_abs_exp_integral_ei(double x, const SpecialFnConfig& cfg) {
  check_config(cfg);
  check_ei_arg(x);
  const double z = -x;
  if (z <= 1.0) {
    return std::log(e1_series(z, cfg));
  }
  return std::log(e1_cf_prefactor(z, cfg)) - z;
}

double upper_incomplete_gamma(double s, double x, const SpecialFnConfig& cfg) {
  check_config(cfg);
  check_gamma_args(s, x);
  double v;
  if (x < s + 1.0) {
    v = std::exp(log_gamma(s)) * (1.0 - gamma_p_series(s, x, cfg));
  } else {
    v = gamma_q_cf_prefactor(s, x, cfg) * std::exp(-x + s * std::log(x));
  }
  if (v < std::numeric_limits<double>::min()) return 0.0;
  return v;
}

double log_upper_incomplete_gamma(double s, double x, const SpecialFnConfig& cfg) {
  check_config(cfg);
  check_gamma_args(s, x);
  if (x < s + 1.0) {
    return log_gamma(s) + std::log1p(-gamma_p_series(s, x, cfg));
  }
  return std::log(gamma_q_cf_prefactor(s, x, cfg)) - x + s * std::log(x);
}

}  // namespace gompertz::special
