#include "gompertz/kl.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "gompertz/special_functions.hpp"

namespace gompertz {

namespace {

// Above this shape value the Ei and gamma terms are assembled in log
// space: e^{q1} overflows near q1 = 709 while the assembled terms stay
// finite, e.g. e^{q1} Ei(-q1) ~ -1/q1.
constexpr double kLogSpaceSwitch = 500.0;

void check_q1(const char* fn, double q1) {
  if (!std::isfinite(q1) || q1 <= 0.0) {
    throw std::domain_error(std::string(fn) + ": q1 must be positive and finite");
  }
}

double ei_term_log_space(double ratio, double q1) {
  // e^{q1} Ei(-q1) = -exp(q1 + ln E1(q1))
  return (ratio - 1.0) * -std::exp(q1 + special::log_abs_exp_integral_ei(-q1));
}

double gamma_term_log_space(double ratio, double q1, double q2) {
  return std::exp(q1 + std::log(q2) - ratio * std::log(q1) +
                  special::log_upper_incomplete_gamma(ratio + 1.0, q1));
}

}  // namespace

KLBreakdown kl_closed_form(const GompertzParams& p1, const GompertzParams& p2) {
  const double ratio = p2.b / p1.b;
  if (!std::isfinite(ratio) || ratio <= 0.0) {
    throw std::overflow_error("kl_closed_form: b2/b1 is not representable");
  }

  KLBreakdown r;
  r.term_const = (p1.q - p2.q) + (std::log(p1.b) - std::log(p2.b)) +
                 (std::log(p1.q) - std::log(p2.q));
  r.term_linear = -(p1.q + 1.0);

  if (p1.q <= kLogSpaceSwitch) {
    r.term_ei = std::exp(p1.q) * (ratio - 1.0) * special::exp_integral_ei(-p1.q);
    r.term_gamma = std::exp(p1.q) * p2.q * std::pow(p1.q, -ratio) *
                   special::upper_incomplete_gamma(ratio + 1.0, p1.q);
    // extreme parameter ratios can overflow the direct products even
    // though the terms themselves are representable
    if (!std::isfinite(r.term_ei)) r.term_ei = ei_term_log_space(ratio, p1.q);
    if (!std::isfinite(r.term_gamma)) {
      r.term_gamma = gamma_term_log_space(ratio, p1.q, p2.q);
    }
  } else {
    r.term_ei = ei_term_log_space(ratio, p1.q);
    r.term_gamma = gamma_term_log_space(ratio, p1.q, p2.q);
  }

  if (!std::isfinite(r.term_ei) || !std::isfinite(r.term_gamma) ||
      !std::isfinite(r.term_const)) {
    throw std::overflow_error("kl_closed_form: divergence overflows double range");
  }
  r.total = r.term_const + r.term_ei + r.term_gamma + r.term_linear;
  return r;
}

quad::QuadratureResult kl_numeric(const GompertzParams& p1,
                                  const GompertzParams& p2, double tol) {
  if (!(tol >= 1e-13) || !(tol <= 1e-6)) {
    throw std::domain_error("kl_numeric: tol must lie in [1e-13, 1e-6]");
  }
  auto integrand = [&p1, &p2](double x) {
    const double lp1 = log_pdf(p1, x);
    if (lp1 == -std::numeric_limits<double>::infinity()) return 0.0;
    const double f1 = std::exp(lp1);
    if (f1 == 0.0) return 0.0;  // 0 * ln(0/f2) -> 0
    return f1 * (lp1 - log_pdf(p2, x));
  };
  return quad::integrate_semi_infinite(integrand, 0.0, tol);
}

double kl_log_tail_integral(double q1) {
  check_q1("kl_log_tail_integral", q1);
  return -special::exp_integral_ei(-q1) / q1;
}

double kl_power_tail_integral(double ratio, double q1) {
  check_q1("kl_power_tail_integral", q1);
  if (!std::isfinite(ratio) || ratio < 0.0) {
    throw std::domain_error("kl_power_tail_integral: ratio must be nonnegative and finite");
  }
  const double v = std::pow(q1, -(ratio + 1.0)) *
                   special::upper_incomplete_gamma(ratio + 1.0, q1);
  if (!std::isfinite(v)) {
    throw std::overflow_error("kl_power_tail_integral: result overflows");
  }
  return v;
}

double kl_linear_tail_integral(double q1) {
  check_q1("kl_linear_tail_integral", q1);
  return std::exp(-q1) * (q1 + 1.0) / (q1 * q1);
}

}  // namespace gompertz
