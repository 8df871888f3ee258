#pragma once

// Independent evaluation routes for the logarithmic theta derivatives at 0
// and for the u^1 Laurent coefficients of cs, ds, ns. Each quantity is
// available through at least two formulas that share no code beyond the
// basic theta and G2 kernels, so their agreement is a meaningful check.

#include "wtpr/power_series.hpp"
#include "wtpr/series_kernels.hpp"

namespace wtpr {

// Log-derivative ratios: j = 1 means theta_1'''(0)/theta_1'(0), j = 2..4
// means theta_j''(0)/theta_j(0).

/// From termwise-differentiated theta constants.
cplx theta_ratio_termwise(int j, const ThetaConstants& tc);
/// Lambert-type sums in q^n/(1 -+ q^n)^2 and q^{n-1/2}/(1 -+ q^{n-1/2})^2.
cplx theta_ratio_lambert(int j, const TauPoint& tau);
/// Linear combinations of G2(tau), G2(2 tau), G2(tau/2). Needs Im(tau) >= 0.2
/// for j = 3, 4.
cplx theta_ratio_g2(int j, const TauPoint& tau);
/// Divisor-type sums n q^n/(1 - q^n) and n q^{n/2}/(1 - q^n).
cplx theta_ratio_divisor(int j, const TauPoint& tau);

// The cs/ds/ns family. Each kind selects one of the three matching
// lambda factors (1 - lambda/2), (1 - 2 lambda), (1 + lambda).

/// 1 + 24 sum n q^n/(1+q^n)  (cs),  1 -+ 24 sum (2n-1) q^{n-1/2}/(1 +- q^{n-1/2})  (ds, ns).
cplx lambda_qsum(EllipticKind kind, const TauPoint& tau);
/// (1 - lambda/2), (1 - 2 lambda) or (1 + lambda), times theta_3(0)^4.
cplx lambda_theta3_form(EllipticKind kind, const ThetaConstants& tc);
/// 2G2(2t) - G2(t),  4G2(2t) + G2(t/2) - 4G2(t),  2G2(t) - G2(t/2).
cplx g2_combination(EllipticKind kind, const TauPoint& tau);

/// u^1 Laurent coefficient of 2K kind(2K u) from the q-series expansion.
cplx laurent_u1_qseries(EllipticKind kind, const TauPoint& tau);
/// Same coefficient from the lambda expression times (2K)^2.
cplx laurent_u1_lambda(EllipticKind kind, const ThetaConstants& tc);
/// Same coefficient extracted by dividing theta Taylor series.
cplx laurent_u1_taylor(EllipticKind kind, const TauPoint& tau);

/// 2K kind(2K u) as a Laurent series from theta Taylor polynomials.
PowerSeries elliptic_laurent(EllipticKind kind, const TauPoint& tau,
                             int order = PowerSeries::kDefaultOrder);

/// phi_2/du = pi theta_2(0)^2 theta_4(u)^2 / theta_1(u)^2 as a Laurent series.
PowerSeries phi2_laurent(const TauPoint& tau, int order = PowerSeries::kDefaultOrder);

struct Phi2Leading {
  cplx u_minus2;
  cplx u_0;
};
/// The closed-form u^-2 and u^0 coefficients of phi_2/du.
Phi2Leading phi2_closed_form(const ThetaConstants& tc);

}  // namespace wtpr
