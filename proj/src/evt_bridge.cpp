#include "gompertz/evt_bridge.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace gompertz::evt {

namespace {

[[noreturn]] void fail_domain(const char* fn, const char* what, double v) {
  char buf[128];
  std::snprintf(buf, sizeof buf, "%s: %s, got %g", fn, what, v);
  throw std::domain_error(buf);
}

void check_positive(const char* fn, const char* name, double v) {
  if (!std::isfinite(v) || v <= 0.0) {
    char what[64];
    std::snprintf(what, sizeof what, "%s must be positive and finite", name);
    fail_domain(fn, what, v);
  }
}

void check_budget(const GompertzParams& p) {
  if (std::exp(-p.q) < 1e-6) {
    char buf[128];
    std::snprintf(buf, sizeof buf,
                  "truncated_transform_sample: expected acceptance rate "
                  "e^{-q} below 1e-6 for q = %g",
                  p.q);
    throw std::runtime_error(buf);
  }
}

void check_n(std::size_t n) {
  if (n == 0) {
    throw std::invalid_argument("truncated_transform_sample: n must be at least 1");
  }
}

// Base draw + transform for each family, shared by the samplers below.
double draw_gumbel_min(std::mt19937_64& rng, double m, double s) {
  const double u = gompertz::detail::uniform01(rng);
  // Gumbel-min quantile: m + s ln(-ln(1-u)); transform is the identity
  return m + s * std::log(-std::log1p(-u));
}

double draw_neg_log_frechet(std::mt19937_64& rng, double a, double r) {
  const double u = gompertz::detail::uniform01(rng);
  // Frechet quantile: r (-ln u)^{-1/a}; transform y = -ln x
  return -std::log(r * std::pow(-std::log(u), -1.0 / a));
}

double draw_log_weibull(std::mt19937_64& rng, double k, double l) {
  const double u = gompertz::detail::uniform01(rng);
  // Weibull quantile: l (-ln(1-u))^{1/k}; transform y = ln x
  return std::log(l * std::pow(-std::log1p(-u), 1.0 / k));
}

bool accepted(double y) { return y >= 0.0 && std::isfinite(y); }

// Shared rejection loop: draw in the base law, transform, keep y >= 0.
template <typename DrawTransformed>
RejectionSample rejection_loop(std::size_t n, std::uint64_t seed,
                               DrawTransformed draw) {
  RejectionSample out;
  out.values.reserve(n);
  std::mt19937_64 rng(seed);
  while (out.values.size() < n) {
    ++out.base_draws;
    const double y = draw(rng);
    if (accepted(y)) {
      out.values.push_back(y);
    }
  }
  return out;
}

template <typename DrawTransformed>
std::uint64_t trial_loop(std::uint64_t n_base, std::uint64_t seed,
                         DrawTransformed draw) {
  std::mt19937_64 rng(seed);
  std::uint64_t count = 0;
  for (std::uint64_t i = 0; i < n_base; ++i) {
    if (accepted(draw(rng))) ++count;
  }
  return count;
}

}  // namespace

GumbelMinParams::GumbelMinParams(double m, double s) : location(m), scale(s) {
  if (!std::isfinite(m)) {
    fail_domain("GumbelMinParams", "location must be finite", m);
  }
  check_positive("GumbelMinParams", "scale", s);
}

FrechetParams::FrechetParams(double a, double r) : shape(a), scale(r) {
  check_positive("FrechetParams", "shape", a);
  check_positive("FrechetParams", "scale", r);
}

WeibullParams::WeibullParams(double k, double l) : shape(k), scale(l) {
  check_positive("WeibullParams", "shape", k);
  check_positive("WeibullParams", "scale", l);
}

GompertzParams to_gompertz(const GumbelMinParams& g) {
  const double e = -g.location / g.scale;
  if (e > 700.0) {
    throw std::overflow_error("to_gompertz: e^{-m/s} overflows for -m/s > 700");
  }
  return GompertzParams(1.0 / g.scale, std::exp(e));
}

GompertzParams to_gompertz(const FrechetParams& f) {
  const double q = std::pow(f.scale, f.shape);
  if (!std::isfinite(q) || q <= 0.0) {
    throw std::overflow_error("to_gompertz: r^a is not representable");
  }
  return GompertzParams(f.shape, q);
}

GompertzParams to_gompertz(const WeibullParams& w) {
  const double q = std::pow(w.scale, -w.shape);
  if (!std::isfinite(q) || q <= 0.0) {
    throw std::overflow_error("to_gompertz: l^{-k} is not representable");
  }
  return GompertzParams(w.shape, q);
}

double base_pdf(const GumbelMinParams& g, double x) {
  if (!std::isfinite(x)) {
    fail_domain("base_pdf(gumbel_min)", "x must be finite", x);
  }
  const double z = (x - g.location) / g.scale;
  return std::exp(z - std::exp(z)) / g.scale;
}

double base_pdf(const FrechetParams& f, double x) {
  if (!std::isfinite(x) || x <= 0.0) {
    fail_domain("base_pdf(frechet)", "x must be positive and finite", x);
  }
  const double t = x / f.scale;
  return f.shape / f.scale * std::pow(t, -1.0 - f.shape) *
         std::exp(-std::pow(t, -f.shape));
}

double base_pdf(const WeibullParams& w, double x) {
  if (!std::isfinite(x) || x < 0.0) {
    fail_domain("base_pdf(weibull)", "x must be nonnegative and finite", x);
  }
  const double t = x / w.scale;
  return w.shape / w.scale * std::pow(t, w.shape - 1.0) *
         std::exp(-std::pow(t, w.shape));
}

double transformed_pdf(const GumbelMinParams& g, double y) {
  return base_pdf(g, y);
}

double transformed_pdf(const FrechetParams& f, double y) {
  // y = -ln x, so f_Y(y) = f_X(e^{-y}) e^{-y}
  const double x = std::exp(-y);
  if (x == 0.0 || !std::isfinite(x)) return 0.0;  // both tails vanish
  return base_pdf(f, x) * x;
}

double transformed_pdf(const WeibullParams& w, double y) {
  // y = ln x, so f_Y(y) = f_X(e^{y}) e^{y}
  const double x = std::exp(y);
  if (x == 0.0 || !std::isfinite(x)) return 0.0;
  return base_pdf(w, x) * x;
}

double gumbel_reparam_pdf(const GompertzParams& p, double x) {
  if (!std::isfinite(x)) {
    fail_domain("gumbel_reparam_pdf", "x must be finite", x);
  }
  return p.b * p.q * std::exp(p.b * x - p.q * std::exp(p.b * x));
}

RejectionSample truncated_transform_sample(const GumbelMinParams& g,
                                           std::size_t n, std::uint64_t seed) {
  check_n(n);
  check_budget(to_gompertz(g));
  return rejection_loop(n, seed, [&g](std::mt19937_64& rng) {
    return draw_gumbel_min(rng, g.location, g.scale);
  });
}

RejectionSample truncated_transform_sample(const FrechetParams& f,
                                           std::size_t n, std::uint64_t seed) {
  check_n(n);
  check_budget(to_gompertz(f));
  return rejection_loop(n, seed, [&f](std::mt19937_64& rng) {
    return draw_neg_log_frechet(rng, f.shape, f.scale);
  });
}

RejectionSample truncated_transform_sample(const WeibullParams& w,
                                           std::size_t n, std::uint64_t seed) {
  check_n(n);
  check_budget(to_gompertz(w));
  return rejection_loop(n, seed, [&w](std::mt19937_64& rng) {
    return draw_log_weibull(rng, w.shape, w.scale);
  });
}

std::uint64_t count_accepted(const GumbelMinParams& g, std::uint64_t n_base,
                             std::uint64_t seed) {
  return trial_loop(n_base, seed, [&g](std::mt19937_64& rng) {
    return draw_gumbel_min(rng, g.location, g.scale);
  });
}

std::uint64_t count_accepted(const FrechetParams& f, std::uint64_t n_base,
                             std::uint64_t seed) {
  return trial_loop(n_base, seed, [&f](std::mt19937_64& rng) {
    return draw_neg_log_frechet(rng, f.shape, f.scale);
  });
}

std::uint64_t count_accepted(const WeibullParams& w, std::uint64_t n_base,
                             std::uint64_t seed) {
  return trial_loop(n_base, seed, [&w](std::mt19937_64& rng) {
    return draw_log_weibull(rng, w.shape, w.scale);
  });
}

}  // namespace gompertz::evt
