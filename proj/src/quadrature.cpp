#include "wtpr/quadrature.hpp"

#include <string>

namespace wtpr {

void QuadratureConfig::validate() const {
  if (levels < 6) throw std::invalid_argument("QuadratureConfig: levels must be at least 6");
  if (!(abs_floor >= 0.0)) throw std::invalid_argument("QuadratureConfig: abs_floor must be non-negative");
}

namespace {

// Beyond this the node distance to the endpoint drops below ~1e-275.
constexpr double kMaxAbscissa = 6.0;
constexpr double kConvergedRel = 1e-11;
constexpr double kFailureRel = 1e-9;
constexpr int kMinLevelForConvergence = 4;

}  // namespace

QuadratureResult tanh_sinh(const EndpointIntegrand& f, double a, double b, const QuadratureConfig& cfg) {
  cfg.validate();
  if (!(a < b) || !std::isfinite(a) || !std::isfinite(b)) {
    throw std::invalid_argument("tanh_sinh: need a finite interval a < b");
  }
  const double half = 0.5 * (b - a);
  QuadratureResult res;

  // sum of w(t) f(x(t)) over the nodes t = k h with k of the given parity
  auto node_sum = [&](double h, int first, int stride) {
    double sum = 0.0;
    for (int k = first;; k += stride) {
      const double t = k * h;
      if (t > kMaxAbscissa) break;
      const double s = 0.5 * kPi * std::sinh(t);
      const double cosh_s = std::cosh(s);
      const double w = 0.5 * kPi * std::cosh(t) / (cosh_s * cosh_s);
      const double d = half / (std::exp(s) * cosh_s);  // distance to the nearer endpoint
      if (k == 0) {
        sum += w * f(a + half, half, half);
        ++res.evaluations;
        continue;
      }
      if (d <= 0.0) break;
      sum += w * (f(b - d, (b - a) - d, d) + f(a + d, d, (b - a) - d));
      res.evaluations += 2;
    }
    return sum;
  };

  double h = 1.0;
  double raw = node_sum(h, 0, 1);
  double estimate = half * h * raw;
  for (int level = 1; level <= cfg.levels; ++level) {
    h *= 0.5;
    raw += node_sum(h, 1, 2);
    const double next = half * h * raw;
    const double diff = std::abs(next - estimate);
    estimate = next;
    res.value = estimate;
    res.last_difference = diff;
    res.levels_used = level;
    if (!std::isfinite(estimate)) throw convergence_error("tanh_sinh: non-finite integral estimate");
    if (level >= kMinLevelForConvergence && diff <= std::max(kConvergedRel * std::abs(estimate), cfg.abs_floor)) {
      return res;
    }
  }
  if (res.last_difference > std::max(kFailureRel * std::abs(estimate), cfg.abs_floor)) {
    throw convergence_error("tanh_sinh: successive levels differ by " + std::to_string(res.last_difference));
  }
  return res;
}

}  // namespace wtpr
