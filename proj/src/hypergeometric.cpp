#include "wtpr/hypergeometric.hpp"

#include <algorithm>
#include <array>
#include <string>

namespace wtpr {

void SeriesEvalPolicy::validate() const {
  if (max_terms < 1) throw std::invalid_argument("SeriesEvalPolicy: max_terms must be positive");
  if (!(rel_tol > 0.0 && rel_tol < 1.0)) throw std::invalid_argument("SeriesEvalPolicy: rel_tol must lie in (0, 1)");
  if (!(radius_guard > 0.0 && radius_guard < 1.0)) {
    throw std::invalid_argument("SeriesEvalPolicy: radius_guard must lie in (0, 1)");
  }
}

namespace {

bool at_nonpositive_integer(double x) {
  return near_integer(x) && std::round(x) <= 0.0;
}

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczosCoeffs = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

double lanczos_gamma(double x) {
  x -= 1.0;
  double series = kLanczosCoeffs[0];
  for (std::size_t i = 1; i < kLanczosCoeffs.size(); ++i) series += kLanczosCoeffs[i] / (x + static_cast<double>(i));
  const double t = x + kLanczosG + 0.5;
  // t^(x+1/2) e^-t, split so large arguments do not overflow early
  const double half_power = std::pow(t, 0.5 * (x + 0.5));
  return std::sqrt(2.0 * kPi) * half_power * (std::exp(-t) * half_power) * series;
}

// sin(pi x) with exact argument reduction.
double sin_pi(double x) {
  const double n = std::round(x);
  const double r = x - n;
  const double s = std::sin(kPi * r);
  return (std::fmod(std::abs(n), 2.0) == 1.0) ? -s : s;
}

}  // namespace

double gamma_real(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("gamma_real: non-finite argument");
  if (at_nonpositive_integer(x)) {
    throw pole_error("gamma_real: pole at non-positive integer (x = " + std::to_string(x) + ")");
  }
  if (x < 0.5) return kPi / (sin_pi(x) * lanczos_gamma(1.0 - x));
  return lanczos_gamma(x);
}

double pochhammer(double x, int n) {
  if (n < 0) throw std::invalid_argument("pochhammer: negative length");
  double p = 1.0;
  for (int k = 0; k < n; ++k) p *= x + k;
  return p;
}

cplx gauss_2f1(double a, double b, double c, cplx z, const SeriesEvalPolicy& policy) {
  policy.validate();
  if (std::abs(z) > policy.radius_guard) {
    throw range_error("gauss_2f1: |z| = " + std::to_string(std::abs(z)) + " exceeds the radius guard");
  }
  if (at_nonpositive_integer(c)) throw pole_error("gauss_2f1: c is a non-positive integer");

  const double az = std::abs(z);
  // ratios of consecutive terms are monotone once n exceeds the parameter sizes
  const double settle = 2.0 + std::max({std::abs(a), std::abs(b), std::abs(c)});
  cplx term = 1.0;
  cplx sum = 1.0;
  for (int n = 0; n < policy.max_terms; ++n) {
    term *= (a + n) * (b + n) / ((c + n) * (n + 1.0)) * z;
    sum += term;
    if (term == cplx{}) return sum;
    if (n + 1 < settle) continue;
    const double next_ratio = std::abs((a + n + 1) * (b + n + 1) / ((c + n + 1) * (n + 2.0))) * az;
    const double rho = std::max(next_ratio, az);
    if (rho < 1.0 && std::abs(term) * rho / (1.0 - rho) <= policy.rel_tol * std::abs(sum)) return sum;
  }
  throw convergence_error("gauss_2f1: no convergence within max_terms");
}

double hyper_4f3_terminating(int n, double a, double b, double c, double d, double e, double f) {
  if (n < 0) throw std::invalid_argument("hyper_4f3_terminating: n must be non-negative");
  for (double lower : {d, e, f}) {
    if (near_integer(lower) && std::round(lower) <= 0.0 && std::round(lower) > -n) {
      throw pole_error("hyper_4f3_terminating: lower parameter " + std::to_string(lower) +
                       " hits a pole inside the summation range");
    }
  }
  double term = 1.0;
  double sum = 1.0;
  for (int k = 0; k < n; ++k) {
    term *= (k - n) * (a + k) * (b + k) * (c + k) / ((d + k) * (e + k) * (f + k) * (k + 1.0));
    sum += term;
  }
  return sum;
}

double whipple_transform(int n, double a, double b, double c, double d, double e, double f) {
  const double prefactor = pochhammer(e - a, n) * pochhammer(f - a, n) / (pochhammer(e, n) * pochhammer(f, n));
  return prefactor * hyper_4f3_terminating(n, a, d - b, d - c, d, a - e - n + 1, a - f - n + 1);
}

namespace {

double factorial(int n) { return pochhammer(1.0, n); }

// 4F3(-n, b, -n+2, 1+a-c; 2-n+a, b-c-n+1, 1; 1), shared by both Whipple forms.
double common_4f3(int n, double a, double b, double c) {
  return hyper_4f3_terminating(n, b, 2.0 - n, 1.0 + a - c, 2.0 - n + a, b - c - n + 1.0, 1.0);
}

}  // namespace

double first_product_coefficient(int n, double a, double b, double c, CoefficientForm form) {
  if (n < 0) throw std::invalid_argument("first_product_coefficient: n must be non-negative");
  const double lead = c * pochhammer(-a - 1.0, n) * pochhammer(1.0 - b, n) / (pochhammer(-c, n) * factorial(n));
  if (form == CoefficientForm::cauchy_4f3) {
    return lead * hyper_4f3_terminating(n, b, a, 1.0 - n + c, 2.0 - n + a, c, b - n);
  }
  return lead * pochhammer(c - b, n) * pochhammer(-n, n) / (pochhammer(c, n) * pochhammer(b - n, n)) *
         common_4f3(n, a, b, c);
}

double second_product_coefficient(int n, double a, double b, double c, CoefficientForm form) {
  if (n < 2) throw std::invalid_argument("second_product_coefficient: n must be at least 2");
  const int m = n - 2;
  if (form == CoefficientForm::cauchy_4f3) {
    const double k = a * (a + 1.0) * (c - b) * (c - b + 1.0) / (c * (1.0 + c) * (1.0 - c));
    const double lead = k * pochhammer(1.0 - a, m) * pochhammer(1.0 - b, m) / (pochhammer(2.0 - c, m) * factorial(m));
    // lower parameter 2-n+b: the reversed Pochhammer of (-b+1)_{m-k}
    return lead * hyper_4f3_terminating(m, b, a + 2.0, 1.0 - n + c, 2.0 - n + a, 2.0 + c, 2.0 - n + b);
  }
  const double lead = -c * pochhammer(-a - 1.0, n) * pochhammer(1.0 - b, m) / (pochhammer(-c, n) * factorial(m));
  return lead * pochhammer(c - b, n) * pochhammer(2.0 - n, m) / (pochhammer(c, n) * pochhammer(2.0 - n + b, m)) *
         common_4f3(n, a, b, c);
}

}  // namespace wtpr
