#pragma once

#include "gompertz/distribution.hpp"
#include "gompertz/quadrature.hpp"

namespace gompertz {

/// The four additive terms of the closed-form KL divergence between two
/// Gompertz distributions, kept separate so each can be audited against
/// the quadrature of its defining integral.
struct KLBreakdown {
  double term_const;   // ln(e^{q1} b1 q1 / (e^{q2} b2 q2)), expanded
  double term_ei;      // e^{q1} (b2/b1 - 1) Ei(-q1)
  double term_gamma;   // e^{q1} q2 q1^{-b2/b1} Gamma(b2/b1 + 1, q1)
  double term_linear;  // -(q1 + 1)
  double total;
};

/// Closed-form KL divergence D(p1 || p2).
///
/// The constant term is assembled from differences of logs, never from a
/// ratio of exponentials. For q1 > 500 the Ei and gamma terms switch to a
/// log-space composition (exp of summed logs), since e^{q1} alone
/// overflows near q1 = 709 while the products stay finite.
/// Throws std::overflow_error if a term overflows even in log space.
KLBreakdown kl_closed_form(const GompertzParams& p1, const GompertzParams& p2);

/// KL divergence by adaptive quadrature of f1 (ln f1 - ln f2) over [0, inf).
/// Where f1 underflows to zero the integrand contributes zero. tol is the
/// relative tolerance passed to the integrator, restricted to [1e-13, 1e-6].
quad::QuadratureResult kl_numeric(const GompertzParams& p1,
                                  const GompertzParams& p2, double tol);

/// int_1^inf ln(y) e^{-q1 y} dy = -Ei(-q1) / q1.
double kl_log_tail_integral(double q1);

/// int_1^inf y^ratio e^{-q1 y} dy = q1^{-(ratio+1)} Gamma(ratio + 1, q1).
double kl_power_tail_integral(double ratio, double q1);

/// int_1^inf y e^{-q1 y} dy = e^{-q1} (q1 + 1) / q1^2.
double kl_linear_tail_integral(double q1);

}  // namespace gompertz
