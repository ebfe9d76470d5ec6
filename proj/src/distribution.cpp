#include "gompertz/distribution.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace gompertz {

namespace {

[[noreturn]] void fail_domain(const char* fn, const char* what, double v) {
  char buf[128];
  std::snprintf(buf, sizeof buf, "%s: %s, got %g", fn, what, v);
  throw std::domain_error(buf);
}

void check_x(const char* fn, double x) {
  if (!std::isfinite(x) || x < 0.0) {
    fail_domain(fn, "x must be nonnegative and finite", x);
  }
}

}  // namespace

GompertzParams::GompertzParams(double b_, double q_) : b(b_), q(q_) {
  if (!std::isfinite(b) || b <= 0.0) {
    fail_domain("GompertzParams", "scale rate b must be positive and finite", b);
  }
  if (!std::isfinite(q) || q <= 0.0) {
    fail_domain("GompertzParams", "shape q must be positive and finite", q);
  }
}

double log_pdf(const GompertzParams& p, double x) {
  check_x("log_pdf", x);
  // q + ln b + ln q + bx - q e^{bx}  ==  ln b + ln q + bx - q (e^{bx} - 1);
  // expm1 keeps small x accurate and overflows cleanly to -inf.
  return std::log(p.b) + std::log(p.q) + p.b * x - p.q * std::expm1(p.b * x);
}

double pdf(const GompertzParams& p, double x) {
  return std::exp(log_pdf(p, x));
}

double cdf(const GompertzParams& p, double x) {
  check_x("cdf", x);
  return -std::expm1(-p.q * std::expm1(p.b * x));
}

double quantile(const GompertzParams& p, double u) {
  if (!std::isfinite(u) || u < 0.0 || u >= 1.0) {
    fail_domain("quantile", "u must lie in [0, 1)", u);
  }
  return std::log1p(-std::log(1.0 - u) / p.q) / p.b;
}

double mode(const GompertzParams& p) {
  if (p.q >= 1.0) return 0.0;
  return -std::log(p.q) / p.b;
}

Sampler::Sampler(const GompertzParams& p, std::uint64_t seed)
    : params_(p), rng_(seed) {}

double Sampler::next() {
  return quantile(params_, detail::uniform01(rng_));
}

std::vector<double> Sampler::sample(std::size_t n) {
  if (n == 0) {
    throw std::invalid_argument("Sampler::sample: n must be at least 1");
  }
  std::vector<double> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(next());
  }
  return out;
}

}  // namespace gompertz
