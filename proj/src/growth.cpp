#include "gompertz/growth.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace gompertz {

std::vector<DecompositionPoint> decompose(const GompertzParams& p,
                                          std::span<const double> xs) {
  std::vector<DecompositionPoint> out;
  out.reserve(xs.size());
  const double log_bq = std::log(p.b) + std::log(p.q);
  for (double x : xs) {
    if (!std::isfinite(x) || x < 0.0) {
      char buf[96];
      std::snprintf(buf, sizeof buf,
                    "decompose: x must be nonnegative and finite, got %g", x);
      throw std::domain_error(buf);
    }
    const double f_g = std::exp(log_bq + p.b * x);
    const double f_d = f_g * cdf(p, x);
    // once f_g overflows the density itself is far below the underflow
    // threshold, so the net term is pinned at 0 instead of inf - inf
    const double f = std::isinf(f_g) ? 0.0 : f_g - f_d;
    out.push_back(DecompositionPoint{x, f_g, f_d, f});
  }
  return out;
}

}  // namespace gompertz
