#pragma once

#include "wtpr/common.hpp"

namespace wtpr {

/// Stopping rules for the Gauss series.
struct SeriesEvalPolicy {
  int max_terms = 2000;
  double rel_tol = 1e-16;
  double radius_guard = 0.95;  // largest admissible |z|

  void validate() const;
};

/// Gamma function on the real line (Lanczos, g = 7, with reflection below 1/2).
/// Throws pole_error within kIntegralityGuard of a non-positive integer.
double gamma_real(double x);

/// Rising factorial (x)_n = x (x+1) ... (x+n-1); (x)_0 = 1.
double pochhammer(double x, int n);

/// 2F1(a, b; c; z) by its power series inside |z| <= policy.radius_guard.
cplx gauss_2f1(double a, double b, double c, cplx z, const SeriesEvalPolicy& policy = {});

/// 4F3(-n, a, b, c; d, e, f; 1), summed left to right over its n+1 terms.
double hyper_4f3_terminating(int n, double a, double b, double c, double d, double e, double f);

/// Right-hand side of Whipple's transformation for the balanced 4F3
/// (a + b + c - n + 1 = d + e + f):
///   (e-a)_n (f-a)_n / ((e)_n (f)_n) * 4F3(-n, a, d-b, d-c; d, a-e-n+1, a-f-n+1; 1).
double whipple_transform(int n, double a, double b, double c, double d, double e, double f);

/// Which of the two displayed expressions for a lambda^n coefficient to use:
/// the 4F3 read off the Cauchy product, or its Whipple-transformed form.
enum class CoefficientForm { cauchy_4f3, whipple };

/// Coefficient of lambda^n in  c 2F1(a,b;c) 2F1(-a-1,-b+1;-c).
double first_product_coefficient(int n, double a, double b, double c, CoefficientForm form);

/// Coefficient of lambda^n (n >= 2) in
///   a(a+1)(c-b)(c-b+1)/(c(1+c)(1-c)) lambda^2 2F1(a+2,b;2+c) 2F1(-a+1,-b+1;2-c).
double second_product_coefficient(int n, double a, double b, double c, CoefficientForm form);

}  // namespace wtpr
