#include "gompertz/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <queue>
#include <stdexcept>
#include <vector>

namespace gompertz::quad {

namespace {

// Gauss-Kronrod 7/15 nodes and weights on [-1, 1] (positive half; the
// odd-index Kronrod nodes together with 0 are the embedded Gauss-7 nodes).
constexpr double kKronrodNodes[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
};
constexpr double kKronrodWeights[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
};
constexpr double kGaussWeights[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

struct Panel {
  double lo;
  double hi;
  double value;
  double err;
};

struct PanelWorse {
  bool operator()(const Panel& a, const Panel& b) const {
    if (a.err != b.err) return a.err < b.err;
    return a.lo < b.lo;  // deterministic tie break
  }
};

void check_rel_tol(double rel_tol) {
  if (!(rel_tol >= 1e-13) || !(rel_tol <= 1e-4)) {
    throw std::domain_error("quadrature: rel_tol must lie in [1e-13, 1e-4]");
  }
}

class Integrator {
 public:
  Integrator(std::function<double(double)> g, std::uint64_t max_evals)
      : g_(std::move(g)), max_evals_(max_evals) {}

  QuadratureResult run(double lo, double hi, double rel_tol) {
    std::priority_queue<Panel, std::vector<Panel>, PanelWorse> heap;
    Panel first = evaluate(lo, hi);
    double total_value = first.value;
    double total_err = first.err;
    heap.push(first);

    while (total_err > rel_tol * std::max(std::abs(total_value), 1e-300)) {
      if (evals_ + 30 > max_evals_) {
        throw std::runtime_error(
            "quadrature: failed to converge within the evaluation budget");
      }
      Panel worst = heap.top();
      heap.pop();
      const double mid = 0.5 * (worst.lo + worst.hi);
      Panel left = evaluate(worst.lo, mid);
      Panel right = evaluate(mid, worst.hi);
      total_value += left.value + right.value - worst.value;
      total_err += left.err + right.err - worst.err;
      heap.push(left);
      heap.push(right);
    }

    // reassemble in interval order for a reproducible summation
    std::vector<Panel> panels;
    panels.reserve(heap.size());
    while (!heap.empty()) {
      panels.push_back(heap.top());
      heap.pop();
    }
    std::sort(panels.begin(), panels.end(),
              [](const Panel& a, const Panel& b) { return a.lo < b.lo; });
    QuadratureResult res;
    for (const Panel& p : panels) {
      res.value += p.value;
      res.error_estimate += p.err;
    }
    res.evaluations = evals_;
    return res;
  }

 private:
  Panel evaluate(double lo, double hi) {
    const double center = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    const double fc = sample(center);
    double resk = kKronrodWeights[7] * fc;
    double resg = kGaussWeights[3] * fc;
    for (int i = 0; i < 7; ++i) {
      const double f1 = sample(center - half * kKronrodNodes[i]);
      const double f2 = sample(center + half * kKronrodNodes[i]);
      resk += kKronrodWeights[i] * (f1 + f2);
      if (i % 2 == 1) {
        resg += kGaussWeights[(i - 1) / 2] * (f1 + f2);
      }
    }
    return Panel{lo, hi, resk * half, std::abs((resk - resg) * half)};
  }

  double sample(double u) {
    const double v = g_(u);
    if (!std::isfinite(v)) {
      char buf[96];
      std::snprintf(buf, sizeof buf,
                    "quadrature: non-finite integrand sample at u = %.17g", u);
      throw std::domain_error(buf);
    }
    ++evals_;
    return v;
  }

  std::function<double(double)> g_;
  std::uint64_t max_evals_;
  std::uint64_t evals_ = 0;
};

}  // namespace

QuadratureResult integrate_semi_infinite(const std::function<double(double)>& f,
                                         double a, double rel_tol,
                                         std::uint64_t max_evals) {
  check_rel_tol(rel_tol);
  if (!std::isfinite(a)) {
    throw std::domain_error("integrate_semi_infinite: lower limit must be finite");
  }
  // t = a + u/(1-u) maps [0, 1) onto [a, inf); dt = du / (1-u)^2
  auto g = [&f, a](double u) {
    const double om = 1.0 - u;
    const double t = a + u / om;
    const double fv = f(t);
    if (fv == 0.0) return 0.0;  // avoids 0 * inf when the weight saturates
    return fv / (om * om);
  };
  return Integrator(g, max_evals).run(0.0, 1.0, rel_tol);
}

QuadratureResult integrate_finite(const std::function<double(double)>& f,
                                  double a, double b, double rel_tol,
                                  std::uint64_t max_evals) {
  check_rel_tol(rel_tol);
  if (!std::isfinite(a) || !std::isfinite(b) || !(a < b)) {
    throw std::domain_error("integrate_finite: requires finite a < b");
  }
  return Integrator(f, max_evals).run(a, b, rel_tol);
}

double ks_distance(std::span<const double> sorted_samples,
                   const std::function<double(double)>& cdf) {
  const std::size_t n = sorted_samples.size();
  if (n == 0) {
    throw std::invalid_argument("ks_distance: sample is empty");
  }
  for (std::size_t i = 1; i < n; ++i) {
    if (sorted_samples[i] < sorted_samples[i - 1]) {
      throw std::invalid_argument("ks_distance: sample must be sorted ascending");
    }
  }
  double d = 0.0;
  const double inv_n = 1.0 / static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double fx = cdf(sorted_samples[i]);
    const double hi = std::abs(static_cast<double>(i + 1) * inv_n - fx);
    const double lo = std::abs(static_cast<double>(i) * inv_n - fx);
    d = std::max(d, std::max(hi, lo));
  }
  return d;
}

}  // namespace gompertz::quad
