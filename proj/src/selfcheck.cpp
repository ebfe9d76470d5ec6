#include "gompertz/selfcheck.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string_view>
#include <vector>

#include "gompertz/distribution.hpp"
#include "gompertz/evt_bridge.hpp"
#include "gompertz/growth.hpp"
#include "gompertz/kl.hpp"
#include "gompertz/quadrature.hpp"
#include "gompertz/special_functions.hpp"

namespace gompertz::selfcheck {

namespace {

double rel_diff(double u, double v) {
  const double scale = std::max(std::abs(u), std::abs(v));
  if (scale < std::numeric_limits<double>::min()) return 0.0;
  return std::abs(u - v) / scale;
}

std::vector<double> linspace(double lo, double hi, int n) {
  std::vector<double> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) {
    out.push_back(lo + (hi - lo) * i / (n - 1));
  }
  return out;
}

std::vector<double> logspace(double lo, double hi, int n) {
  std::vector<double> out;
  out.reserve(n);
  const double llo = std::log(lo);
  const double lhi = std::log(hi);
  for (int i = 0; i < n; ++i) {
    out.push_back(std::exp(llo + (lhi - llo) * i / (n - 1)));
  }
  return out;
}

constexpr double kParamGrid[5] = {0.25, 0.5, 1.0, 2.0, 4.0};

// Pairs for the pointwise density identities. Chosen so q e^{bx} stays
// below ~300 on the x grids: past that the compared exponents are large
// enough that double rounding alone exceeds the 1e-13 budget.
const GompertzParams kIdentityPairs[5] = {
    {0.25, 0.25}, {0.25, 1.0}, {0.25, 4.0}, {0.5, 1.0}, {0.5, 1.5}};

const GompertzParams kGrowthPairs[5] = {
    {0.25, 0.25}, {0.5, 2.0}, {1.0, 1.0}, {2.0, 0.5}, {4.0, 4.0}};

struct Recorder {
  const CheckOptions& opts;
  std::vector<CheckResult> results;

  bool wanted(std::string_view name) const {
    return opts.only.empty() || name.find(opts.only) != std::string_view::npos;
  }
  void record(std::string name, double stat, double limit) {
    results.push_back(CheckResult{std::move(name), stat, limit, stat <= limit});
  }
};

void check_kl_grid(Recorder& rec) {
  if (!rec.wanted("kl-grid-oracle")) return;
  const double scale = 1.0 + rec.opts.perturb;
  double worst = 0.0;
  for (double b1 : kParamGrid)
    for (double q1 : kParamGrid)
      for (double b2 : kParamGrid)
        for (double q2 : kParamGrid) {
          const GompertzParams p1(b1, q1), p2(b2, q2);
          const GompertzParams p1p(b1 * scale, q1 * scale);
          const double closed = kl_closed_form(p1p, p2).total;
          const double oracle = kl_numeric(p1, p2, 1e-10).value;
          const double err =
              std::abs(closed - oracle) / std::max(1.0, std::abs(closed));
          worst = std::max(worst, err);
        }
  rec.record("kl-grid-oracle", worst, 1e-8);
}

void check_kl_self_divergence(Recorder& rec) {
  if (!rec.wanted("kl-self-divergence")) return;
  std::mt19937_64 rng(rec.opts.seed ^ 0x5e1fd1ull);
  double worst = 0.0;
  for (int i = 0; i < 50; ++i) {
    const double b = std::exp(-2.3 + 4.6 * detail::uniform01(rng));
    const double q = std::exp(-3.0 + 4.6 * detail::uniform01(rng));
    const GompertzParams p(b, q);
    worst = std::max(worst, std::abs(kl_closed_form(p, p).total));
  }
  rec.record("kl-self-divergence", worst, 1e-12);
}

void check_kl_spots(Recorder& rec) {
  const bool want_analytic = rec.wanted("kl-spot-analytic");
  const bool want_oracle = rec.wanted("kl-spot-oracle");
  if (!want_analytic && !want_oracle) return;
  const double scale = 1.0 + rec.opts.perturb;
  const GompertzParams p11(1.0 * scale, 1.0 * scale);
  const GompertzParams p12(1.0, 2.0), p21(2.0, 1.0);
  const double kl_a = kl_closed_form(p11, p12).total;
  const double kl_b = kl_closed_form(p11, p21).total;
  if (want_analytic) {
    const double want_a = 0.30685281944005469;  // 1 - ln 2
    const double want_b = 1.7105054571168606;   // -ln 2 + e Ei(-1) + 3
    const double stat =
        std::max(std::abs(kl_a - want_a), std::abs(kl_b - want_b));
    rec.record("kl-spot-analytic", stat, 1e-10);
  }
  if (want_oracle) {
    const GompertzParams p11c(1.0, 1.0);
    const double stat =
        std::max(std::abs(kl_a - kl_numeric(p11c, p12, 1e-11).value),
                 std::abs(kl_b - kl_numeric(p11c, p21, 1e-11).value));
    rec.record("kl-spot-oracle", stat, 1e-8);
  }
}

void check_kl_term_integrals(Recorder& rec) {
  if (!rec.wanted("kl-term-integrals")) return;
  const double q1s[] = {0.1, 0.5, 1.0, 2.0, 5.0};
  const double ratios[] = {0.5, 1.0, 2.0, 3.0};
  double worst = 0.0;
  for (double q1 : q1s) {
    const auto log_q = quad::integrate_semi_infinite(
        [q1](double y) { return std::log(y) * std::exp(-q1 * y); }, 1.0, 1e-12);
    worst = std::max(worst, rel_diff(kl_log_tail_integral(q1), log_q.value));
    const auto lin_q = quad::integrate_semi_infinite(
        [q1](double y) { return y * std::exp(-q1 * y); }, 1.0, 1e-12);
    worst = std::max(worst, rel_diff(kl_linear_tail_integral(q1), lin_q.value));
    for (double ratio : ratios) {
      const auto pow_q = quad::integrate_semi_infinite(
          [q1, ratio](double y) { return std::pow(y, ratio) * std::exp(-q1 * y); },
          1.0, 1e-12);
      worst = std::max(worst,
                       rel_diff(kl_power_tail_integral(ratio, q1), pow_q.value));
    }
  }
  rec.record("kl-term-integrals", worst, 1e-10);
}

void check_evt_pointwise_identity(Recorder& rec) {
  if (!rec.wanted("evt-pointwise-identity")) return;
  double worst = 0.0;
  for (const GompertzParams& p : kIdentityPairs) {
    const double eq = std::exp(p.q);
    for (double x : linspace(0.0, 10.0, 100)) {
      worst = std::max(
          worst, rel_diff(eq * evt::gumbel_reparam_pdf(p, x), pdf(p, x)));
    }
  }
  rec.record("evt-pointwise-identity", worst, 1e-13);
}

void check_evt_transformed_density(Recorder& rec) {
  if (!rec.wanted("evt-transformed-density")) return;
  std::mt19937_64 rng(rec.opts.seed ^ 0xf3e7c2ull);
  const auto ys = linspace(-5.0, 5.0, 200);
  double worst = 0.0;
  for (int i = 0; i < 5; ++i) {
    const evt::FrechetParams f(0.4 + 0.6 * detail::uniform01(rng),
                               0.7 + 0.8 * detail::uniform01(rng));
    const GompertzParams mf = evt::to_gompertz(f);
    for (double y : ys) {
      worst = std::max(worst, rel_diff(evt::transformed_pdf(f, y),
                                       evt::gumbel_reparam_pdf(mf, y)));
    }
    const evt::WeibullParams w(0.4 + 0.6 * detail::uniform01(rng),
                               0.7 + 0.8 * detail::uniform01(rng));
    const GompertzParams mw = evt::to_gompertz(w);
    for (double y : ys) {
      worst = std::max(worst, rel_diff(evt::transformed_pdf(w, y),
                                       evt::gumbel_reparam_pdf(mw, y)));
    }
  }
  rec.record("evt-transformed-density", worst, 1e-12);
}

void check_evt_truncation_constant(Recorder& rec) {
  if (!rec.wanted("evt-truncation-constant")) return;
  double worst = 0.0;
  for (const GompertzParams& p : kIdentityPairs) {
    const auto q = quad::integrate_semi_infinite(
        [&p](double x) { return evt::gumbel_reparam_pdf(p, x); }, 0.0, 1e-11);
    worst = std::max(worst, std::abs(q.value - std::exp(-p.q)));
  }
  rec.record("evt-truncation-constant", worst, 1e-10);
}

void check_evt_ks(Recorder& rec) {
  const std::size_t n = 100'000;
  const double limit = 1.36 / std::sqrt(static_cast<double>(n));
  const auto ks_of = [n](std::vector<double> values, const GompertzParams& p) {
    std::sort(values.begin(), values.end());
    return quad::ks_distance(values, [&p](double x) { return cdf(p, x); });
  };
  if (rec.wanted("evt-ks-gumbel")) {
    const evt::GumbelMinParams g(-0.6931471805599453, 1.0);  // maps to (1, 2)
    auto s = evt::truncated_transform_sample(g, n, rec.opts.seed ^ 0xa1ull);
    rec.record("evt-ks-gumbel", ks_of(std::move(s.values), evt::to_gompertz(g)),
               limit);
  }
  if (rec.wanted("evt-ks-frechet")) {
    const evt::FrechetParams f(2.0, 1.0);  // maps to (2, 1)
    auto s = evt::truncated_transform_sample(f, n, rec.opts.seed ^ 0xa2ull);
    rec.record("evt-ks-frechet", ks_of(std::move(s.values), evt::to_gompertz(f)),
               limit);
  }
  if (rec.wanted("evt-ks-weibull")) {
    const evt::WeibullParams w(1.0, 1.0);  // maps to (1, 1)
    auto s = evt::truncated_transform_sample(w, n, rec.opts.seed ^ 0xa3ull);
    rec.record("evt-ks-weibull", ks_of(std::move(s.values), evt::to_gompertz(w)),
               limit);
  }
}

void check_evt_acceptance_rate(Recorder& rec) {
  if (!rec.wanted("evt-acceptance-rate")) return;
  const std::uint64_t n_base = 1'000'000;
  double worst = 0.0;
  const auto zscore = [n_base](std::uint64_t accepted, double q) {
    const double p = std::exp(-q);
    const double se = std::sqrt(p * (1.0 - p) / static_cast<double>(n_base));
    const double rate = static_cast<double>(accepted) / static_cast<double>(n_base);
    return std::abs(rate - p) / se;
  };
  const evt::GumbelMinParams g(-0.6931471805599453, 1.0);
  worst = std::max(worst, zscore(evt::count_accepted(g, n_base, rec.opts.seed ^ 0xb1ull),
                                 evt::to_gompertz(g).q));
  const evt::FrechetParams f(2.0, 1.0);
  worst = std::max(worst, zscore(evt::count_accepted(f, n_base, rec.opts.seed ^ 0xb2ull),
                                 evt::to_gompertz(f).q));
  const evt::WeibullParams w(1.0, 1.0);
  worst = std::max(worst, zscore(evt::count_accepted(w, n_base, rec.opts.seed ^ 0xb3ull),
                                 evt::to_gompertz(w).q));
  rec.record("evt-acceptance-rate", worst, 3.0);
}

void check_core_normalization(Recorder& rec) {
  if (!rec.wanted("core-normalization")) return;
  double worst = 0.0;
  for (double b : kParamGrid)
    for (double q : kParamGrid) {
      const GompertzParams p(b, q);
      const auto r = quad::integrate_semi_infinite(
          [&p](double x) { return pdf(p, x); }, 0.0, 1e-11);
      worst = std::max(worst, std::abs(r.value - 1.0));
    }
  rec.record("core-normalization", worst, 1e-10);
}

void check_core_quantile_roundtrip(Recorder& rec) {
  if (!rec.wanted("core-quantile-roundtrip")) return;
  std::mt19937_64 rng(rec.opts.seed ^ 0xc0ull);
  const GompertzParams p(1.0, 1.0);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const double u = detail::uniform01(rng);
    worst = std::max(worst, std::abs(cdf(p, quantile(p, u)) - u));
  }
  rec.record("core-quantile-roundtrip", worst, 1e-9);
}

void check_core_mode_argmax(Recorder& rec) {
  if (!rec.wanted("core-mode-argmax")) return;
  const double qs[] = {0.1, 0.5, 0.9, 1.0, 2.0};
  const double step = 1e-5;
  double worst = 0.0;
  for (double q : qs) {
    const GompertzParams p(1.0, q);
    double best_x = 0.0;
    double best_lp = log_pdf(p, 0.0);
    for (double x = step; x <= 20.0; x += step) {
      const double lp = log_pdf(p, x);
      if (lp > best_lp) {
        best_lp = lp;
        best_x = x;
      }
    }
    worst = std::max(worst, std::abs(mode(p) - best_x));
  }
  rec.record("core-mode-argmax", worst, 2.0 * step);
}

void check_growth(Recorder& rec) {
  const bool want_identity = rec.wanted("growth-identity");
  const bool want_ratio = rec.wanted("growth-monotone-ratio");
  if (!want_identity && !want_ratio) return;
  const auto xs = linspace(0.0, 5.0, 100);
  double worst = 0.0;
  bool monotone = true;
  for (const GompertzParams& p : kGrowthPairs) {
    const auto rows = decompose(p, xs);
    double prev_ratio = 0.0;
    for (const auto& row : rows) {
      const double f = pdf(p, row.x);
      worst = std::max(worst, std::abs(row.f - f) / std::max(1.0, f));
      const double ratio = row.f_g > 0.0 ? row.f_d / row.f_g : 1.0;
      if (ratio < prev_ratio) monotone = false;
      prev_ratio = ratio;
    }
  }
  if (want_identity) rec.record("growth-identity", worst, 1e-12);
  if (want_ratio) rec.record("growth-monotone-ratio", monotone ? 0.0 : 1.0, 0.5);
}

void check_special_ei(Recorder& rec) {
  if (!rec.wanted("special-ei-oracle")) return;
  double worst = 0.0;
  for (double z : logspace(1e-3, 50.0, 50)) {
    const auto q = quad::integrate_semi_infinite(
        [](double t) { return std::exp(-t) / t; }, z, 1e-12);
    worst = std::max(worst, rel_diff(special::exp_integral_ei(-z), -q.value));
  }
  rec.record("special-ei-oracle", worst, 1e-11);
}

void check_special_gamma(Recorder& rec) {
  const bool want_oracle = rec.wanted("special-gamma-oracle");
  const bool want_recur = rec.wanted("special-gamma-recurrence");
  if (!want_oracle && !want_recur) return;
  const double ss[] = {0.5, 1.0, 1.5, 2.0, 3.0, 5.0};
  double worst_oracle = 0.0;
  double worst_recur = 0.0;
  for (double s : ss) {
    for (double x : logspace(1e-3, 30.0, 20)) {
      const double got = special::upper_incomplete_gamma(s, x);
      if (want_oracle) {
        const auto q = quad::integrate_semi_infinite(
            [s](double t) { return std::pow(t, s - 1.0) * std::exp(-t); }, x,
            1e-12);
        worst_oracle = std::max(worst_oracle, rel_diff(got, q.value));
      }
      if (want_recur) {
        const double lhs = special::upper_incomplete_gamma(s + 1.0, x);
        const double rhs = s * got + std::pow(x, s) * std::exp(-x);
        worst_recur = std::max(worst_recur, rel_diff(lhs, rhs));
      }
    }
  }
  if (want_oracle) rec.record("special-gamma-oracle", worst_oracle, 1e-11);
  if (want_recur) rec.record("special-gamma-recurrence", worst_recur, 1e-12);
}

}  // namespace

std::vector<CheckResult> run_checks(const CheckOptions& opts) {
  Recorder rec{opts, {}};
  check_kl_grid(rec);
  check_kl_self_divergence(rec);
  check_kl_spots(rec);
  check_kl_term_integrals(rec);
  check_evt_pointwise_identity(rec);
  check_evt_transformed_density(rec);
  check_evt_truncation_constant(rec);
  check_evt_ks(rec);
  check_evt_acceptance_rate(rec);
  check_core_normalization(rec);
  check_core_quantile_roundtrip(rec);
  check_core_mode_argmax(rec);
  check_growth(rec);
  check_special_ei(rec);
  check_special_gamma(rec);
  return rec.results;
}

}  // namespace gompertz::selfcheck
