#include "gompertz/fit.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

namespace gompertz {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr double kLn4 = 1.3862943611198906;
constexpr double kGolden = 0.61803398874989485;  // (sqrt 5 - 1) / 2

void check_data(std::span<const double> data) {
  if (data.size() < 2) {
    throw std::invalid_argument("fit_mle: need at least 2 observations");
  }
  for (double v : data) {
    if (!std::isfinite(v) || v < 0.0) {
      char buf[96];
      std::snprintf(buf, sizeof buf,
                    "fit_mle: observations must be nonnegative and finite, got %g", v);
      throw std::domain_error(buf);
    }
  }
}

// Profile log likelihood over t = ln b. Substituting the stationary
// q(b) = n / sum(expm1(b x_i)) collapses the likelihood to
//   l_p(b) = n (ln b + ln q(b) - 1) + b sum(x_i).
// Overflowing exponents push the value to -inf, which the search treats
// as a wall.
class ProfileLikelihood {
 public:
  ProfileLikelihood(std::span<const double> data, double sum_x)
      : data_(data), sum_x_(sum_x), n_(static_cast<double>(data.size())) {}

  double operator()(double t) const {
    const double b = std::exp(t);
    const double d = expm1_sum(b);
    if (!std::isfinite(d) || d <= 0.0) return kNegInf;
    const double q_hat = n_ / d;
    return n_ * (t + std::log(q_hat) - 1.0) + b * sum_x_;
  }

  double q_hat(double b) const { return n_ / expm1_sum(b); }

 private:
  double expm1_sum(double b) const {
    double d = 0.0;
    for (double v : data_) {
      const double w = b * v;
      if (w > 700.0) return std::numeric_limits<double>::infinity();
      d += std::expm1(w);
    }
    return d;
  }

  std::span<const double> data_;
  double sum_x_;
  double n_;
};

}  // namespace

double log_likelihood(std::span<const double> data, const GompertzParams& p) {
  double ll = 0.0;
  for (double v : data) {
    ll += log_pdf(p, v);
  }
  return ll;
}

FitResult fit_mle(std::span<const double> data, const FitConfig& cfg) {
  check_data(data);
  if (!(cfg.ln_b_tol > 0.0) || cfg.max_iterations < 1 || cfg.max_expansions < 1) {
    throw std::invalid_argument("fit_mle: invalid configuration");
  }

  double sum_x = 0.0;
  for (double v : data) sum_x += v;
  if (sum_x == 0.0) {
    throw std::domain_error(
        "fit_mle: degenerate data, all observations are zero");
  }

  const ProfileLikelihood profile(data, sum_x);
  const double n = static_cast<double>(data.size());

  // bracket the maximum around the rate-scale guess b0 = 1/mean
  double tm = -std::log(sum_x / n);
  double tl = tm - kLn4;
  double tr = tm + kLn4;
  double fl = profile(tl);
  double fm = profile(tm);
  double fr = profile(tr);
  int expansions = 0;
  while ((fl >= fm || fr >= fm) && expansions < cfg.max_expansions) {
    if (fl >= fm) {
      tr = tm;
      fr = fm;
      tm = tl;
      fm = fl;
      tl -= kLn4;
      fl = profile(tl);
    } else {
      tl = tm;
      fl = fm;
      tm = tr;
      fm = fr;
      tr += kLn4;
      fr = profile(tr);
    }
    ++expansions;
  }
  const bool bracketed = fm > fl && fm > fr;
  if (!bracketed && fm == kNegInf) {
    throw std::runtime_error("fit_mle: failed to bracket the profile likelihood");
  }

  // golden-section search on [tl, tr]
  double a = tl;
  double b = tr;
  double x1 = b - kGolden * (b - a);
  double x2 = a + kGolden * (b - a);
  double f1 = profile(x1);
  double f2 = profile(x2);
  int iterations = expansions;
  while (b - a > cfg.ln_b_tol && iterations < cfg.max_iterations) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kGolden * (b - a);
      f2 = profile(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kGolden * (b - a);
      f1 = profile(x1);
    }
    ++iterations;
  }

  const double t_hat = 0.5 * (a + b);
  const double b_hat = std::exp(t_hat);
  const GompertzParams params(b_hat, profile.q_hat(b_hat));
  const double ll = log_likelihood(data, params);
  const bool converged = bracketed && (b - a) <= cfg.ln_b_tol && std::isfinite(ll);
  return FitResult{params, ll, iterations, converged, std::exp(a), std::exp(b)};
}

}  // namespace gompertz
