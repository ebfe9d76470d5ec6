#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

namespace gompertz {

/// Parameters of the Gompertz distribution: scale rate b > 0 and
/// dimensionless shape q > 0. The constructor validates both.
struct GompertzParams {
  double b;
  double q;
  GompertzParams(double b_, double q_);
};

/// Density e^q b q e^{bx} e^{-q e^{bx}} on x >= 0, computed as exp(log_pdf).
double pdf(const GompertzParams& p, double x);

/// Log density ln b + ln q + b x - q (e^{bx} - 1). Returns -inf once the
/// e^{bx} term overflows, where the density has long underflown to zero.
double log_pdf(const GompertzParams& p, double x);

/// CDF 1 - e^q e^{-q e^{bx}}, evaluated as -expm1(-q expm1(bx)) so values
/// near zero keep full precision.
double cdf(const GompertzParams& p, double x);

/// Inverse CDF (1/b) ln(1 - ln(1-u)/q) for u in [0, 1).
///
/// The analytic form is exact; for u above 1 - 1e-16 the spacing of
/// doubles near 1 limits how finely the right tail can be resolved.
double quantile(const GompertzParams& p, double u);

/// Mode of the density: 0 for q >= 1, (1/b) ln(1/q) otherwise.
double mode(const GompertzParams& p);

namespace detail {
inline double uniform01(std::mt19937_64& rng) {
  // 53-bit mantissa draw in [0, 1)
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}
}  // namespace detail

/// Seeded inverse-CDF sampler. Identical seed and parameters reproduce the
/// identical stream within a build. Single-owner: use one per thread.
class Sampler {
 public:
  Sampler(const GompertzParams& p, std::uint64_t seed);

  double next();
  std::vector<double> sample(std::size_t n);

  const GompertzParams& params() const { return params_; }

 private:
  GompertzParams params_;
  std::mt19937_64 rng_;
};

}  // namespace gompertz
