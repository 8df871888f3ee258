#pragma once

#include <functional>

#include "wtpr/common.hpp"

namespace wtpr {

struct QuadratureConfig {
  int levels = 10;          // maximum number of step-halvings
  double abs_floor = 1e-15;  // absolute floor for the convergence test

  void validate() const;
};

/// Integrand on an open interval (a, b). Besides the abscissa x it receives
/// the exact distances x - a and b - x, so integrands with algebraic
/// endpoint singularities can be evaluated without cancellation.
using EndpointIntegrand = std::function<double(double x, double from_left, double from_right)>;

struct QuadratureResult {
  double value = 0.0;
  double last_difference = 0.0;  // |I_L - I_{L-1}| at the accepted level
  int levels_used = 0;
  int evaluations = 0;
};

/// Tanh-sinh (double-exponential) quadrature with level doubling. Declares
/// convergence once two successive levels agree to 1e-11 relative; throws
/// convergence_error if they still differ by more than 1e-9 at the last level.
QuadratureResult tanh_sinh(const EndpointIntegrand& f, double a, double b, const QuadratureConfig& cfg = {});

}  // namespace wtpr
