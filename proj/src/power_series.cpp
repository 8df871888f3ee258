#include "wtpr/power_series.hpp"

#include <algorithm>

namespace wtpr {

PowerSeries::PowerSeries(std::vector<cplx> coeffs, int pole_order)
    : coeffs_(std::move(coeffs)), pole_order_(pole_order) {
  if (pole_order_ < 0) throw std::invalid_argument("PowerSeries: negative pole order");
  if (coeffs_.empty()) throw std::invalid_argument("PowerSeries: no coefficients");
}

PowerSeries PowerSeries::constant(cplx value, int order) {
  std::vector<cplx> c(static_cast<std::size_t>(order) + 1, cplx{});
  c[0] = value;
  return PowerSeries(std::move(c));
}

PowerSeries PowerSeries::variable(int order) {
  std::vector<cplx> c(static_cast<std::size_t>(order) + 1, cplx{});
  if (order >= 1) c[1] = 1.0;
  return PowerSeries(std::move(c));
}

// Builds a series holding exponents [lowest, highest]. A positive lowest
// exponent is padded down to u^0 with exact zeros so pole_order stays >= 0.
PowerSeries PowerSeries::from_range(int lowest, int highest, std::vector<cplx> values) {
  if (highest < lowest) throw range_error("PowerSeries: truncation leaves no known coefficients");
  if (lowest > 0) {
    values.insert(values.begin(), static_cast<std::size_t>(lowest), cplx{});
    lowest = 0;
  }
  return PowerSeries(std::move(values), -lowest);
}

cplx PowerSeries::coefficient(int exponent) const {
  if (exponent > order()) throw range_error("PowerSeries: coefficient beyond truncation order");
  if (exponent < lowest()) return {};
  return coeffs_[static_cast<std::size_t>(exponent - lowest())];
}

int PowerSeries::valuation() const {
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] != cplx{}) return static_cast<int>(k) + lowest();
  }
  throw range_error("PowerSeries: all retained coefficients vanish");
}

PowerSeries PowerSeries::inverse() const {
  const int v = valuation();
  // normalized d(u) = u^-v * this, known for relative exponents 0..order()-v
  const int known = order() - v;
  std::vector<cplx> d(static_cast<std::size_t>(known) + 1);
  for (int k = 0; k <= known; ++k) d[k] = coefficient(v + k);
  std::vector<cplx> r(d.size());
  const cplx inv0 = 1.0 / d[0];
  r[0] = inv0;
  for (int k = 1; k <= known; ++k) {
    cplx acc{};
    for (int i = 1; i <= k; ++i) acc += d[i] * r[k - i];
    r[k] = -inv0 * acc;
  }
  return from_range(-v, -v + known, std::move(r));
}

PowerSeries PowerSeries::derivative() const {
  const int lo = lowest() - 1;
  const int hi = order() - 1;
  std::vector<cplx> c(static_cast<std::size_t>(hi - lo) + 1);
  for (int e = lo; e <= hi; ++e) c[e - lo] = static_cast<double>(e + 1) * coefficient(e + 1);
  return from_range(lo, hi, std::move(c));
}

PowerSeries& PowerSeries::operator*=(cplx s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
  const int lo = std::min(a.lowest(), b.lowest());
  const int hi = std::min(a.order(), b.order());
  std::vector<cplx> c;
  for (int e = lo; e <= hi; ++e) c.push_back(a.coefficient(e) + b.coefficient(e));
  return PowerSeries::from_range(lo, hi, std::move(c));
}

PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
  return a + (-1.0) * b;
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
  const int lo = a.lowest() + b.lowest();
  const int hi = std::min(a.order() + b.lowest(), b.order() + a.lowest());
  std::vector<cplx> c;
  for (int e = lo; e <= hi; ++e) {
    cplx acc{};
    for (int i = a.lowest(); i <= e - b.lowest(); ++i) acc += a.coefficient(i) * b.coefficient(e - i);
    c.push_back(acc);
  }
  return PowerSeries::from_range(lo, hi, std::move(c));
}

PowerSeries operator/(const PowerSeries& a, const PowerSeries& b) {
  return a * b.inverse();
}

}  // namespace wtpr
