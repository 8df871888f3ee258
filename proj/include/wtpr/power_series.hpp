#pragma once

#include <vector>

#include "wtpr/common.hpp"

namespace wtpr {

/// Truncated Laurent series around u = 0 with complex coefficients.
///
/// The series is  sum_k coeffs[k] * u^(k - pole_order),  known exactly up to
/// and including the exponent order(). Every arithmetic operation tracks how
/// many coefficients of the result are still determined by its inputs and
/// drops the rest, so coefficient() never returns a value contaminated by
/// truncation. Zero tests (valuation, division) are exact comparisons with 0:
/// callers that need parity zeros must supply them as exact zeros.
class PowerSeries {
 public:
  static constexpr int kDefaultOrder = 8;

  PowerSeries() = default;
  /// coeffs[k] multiplies u^(k - pole_order). pole_order must be >= 0.
  explicit PowerSeries(std::vector<cplx> coeffs, int pole_order = 0);

  static PowerSeries constant(cplx value, int order = kDefaultOrder);
  /// The series u (identity), exact up to `order`.
  static PowerSeries variable(int order = kDefaultOrder);

  int pole_order() const noexcept { return pole_order_; }
  /// Highest exponent whose coefficient is retained.
  int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1 - pole_order_; }
  const std::vector<cplx>& coeffs() const noexcept { return coeffs_; }

  /// Coefficient of u^exponent. Exponents below the stored range are exact
  /// zeros; exponents above order() throw range_error.
  cplx coefficient(int exponent) const;

  /// Lowest exponent with a nonzero coefficient; throws if all retained
  /// coefficients vanish.
  int valuation() const;

  PowerSeries inverse() const;
  PowerSeries derivative() const;

  PowerSeries& operator*=(cplx s);
  friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator/(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator*(cplx s, PowerSeries a) { return a *= s; }

 private:
  int lowest() const noexcept { return -pole_order_; }
  static PowerSeries from_range(int lowest, int highest, std::vector<cplx> values);

  std::vector<cplx> coeffs_;
  int pole_order_ = 0;
};

}  // namespace wtpr
