#pragma once

#include <array>

#include "wtpr/complex_matrix.hpp"
#include "wtpr/intersection.hpp"
#include "wtpr/quadrature.hpp"
#include "wtpr/series_kernels.hpp"

namespace wtpr {

/// Parameter shift turning the phi_3 period formulas into those of phi_i.
/// Rows phi_1 and phi_4 additionally carry the factor theta_3(0)^2/theta_2(0)^2:
/// their cocycles are normalized by pi theta_3(0)^2 where phi_3 uses
/// pi theta_2(0)^2.
struct ShiftRule {
  double d_alpha;
  double d_beta;
  double d_gamma;
  bool theta_normalized;
};

/// Shift rule for cocycle index i in 1..4.
const ShiftRule& shift_rule(int i);

HgParams apply_shift(int i, const HgParams& p);

/// The phi_3 period over cycle sigma_j (j = 1..4) at parameters p.
cplx phi3_period(int j, const HgParams& p, const ThetaConstants& tc);

/// Period of phi_i over sigma_j: the shift rule applied to phi3_period.
cplx period_entry(int i, int j, const HgParams& p, const TauPoint& tau);
cplx period_entry(int i, int j, const HgParams& p, const ThetaConstants& tc);

/// P+ = (period_entry(i, j, p)), P- = (period_entry(i, j, -p)).
ComplexMatrix period_matrix(Sign sign, const HgParams& p, const TauPoint& tau);
ComplexMatrix period_matrix(Sign sign, const HgParams& p, const ThetaConstants& tc);

/// P'(-1) (rows phi_1, phi_2) and P'(+1) (rows phi_3, phi_4), columns sigma_1, sigma_3,
/// taken from the period matrix of the given sign.
EigenBlocks block_periods(Sign sign, const HgParams& p, const TauPoint& tau);
EigenBlocks block_periods(Sign sign, const HgParams& p, const ThetaConstants& tc);

/// Integral over (0, 1/2) of
///   theta_1^{2a-1} theta_2^{2g-2a-1} theta_3^{1-2b} theta_4^{2b-2g+1}
/// by tanh-sinh. Requires purely imaginary tau, alpha > 0, gamma - alpha > 0.
QuadratureResult wirtinger_quadrature(const HgParams& p, const TauPoint& tau, const QuadratureConfig& cfg = {});

/// Factor 2 pi theta_3(0)^2 lambda^{(1-g)/2} (1-lambda)^{(g-a-b)/2} that turns the
/// Wirtinger integral into B(alpha, gamma-alpha) 2F1(alpha, beta, gamma; lambda).
cplx wirtinger_prefactor(const HgParams& p, const ThetaConstants& tc);

// ---------------------------------------------------------------------------
// Euler-integral pairings for U(t) = t^a (1-t)^{c-a} (1-zt)^{-b}

enum class EulerSide { p1_plus, p2_plus, p1_minus, p2_minus };

const char* to_string(EulerSide s);

/// Tanh-sinh evaluation of the pairing. p1 integrates over (0,1); p2 over
/// (1/z, infinity) with |U| on the real path, mapped to (0,1) by t = 1/(z s).
/// Needs z real in (0,1) and integrable endpoint exponents:
///   p1+: a > 0, c-a > 0        p1-: a < -1, a-c+1 > 0
///   p2+: b < 1, c-b < 1        p2-: b > 0, c-b > -2
QuadratureResult euler_pairing(EulerSide side, double a, double b, double c, cplx z,
                               const QuadratureConfig& cfg = {});

/// Beta-times-2F1 closed form of the same pairing, valid wherever the Gamma
/// and 2F1 factors are finite.
cplx euler_pairing_closed(EulerSide side, double a, double b, double c, cplx z);

/// Twisted period relation combination of the four pairings.
cplx euler_combination(double a, double b, double c, cplx p1p, cplx p1m, cplx p2p, cplx p2m);

/// Cohomology intersection number 2 pi i ((a-b+1) z + c) / (a (a+1)).
cplx euler_intersection_number(double a, double b, double c, cplx z);

/// The two-term 2F1-product expression for the same number.
cplx euler_product_form(double a, double b, double c, cplx z);

// ---------------------------------------------------------------------------
// Entry (2,2) of the C(-1) relation, alpha = a + 1/2, beta = b - 1/2, gamma = c

/// Theta-derivative left-hand side.
cplx entry22_lhs_theta(double a, double b, double c, const ThetaConstants& tc);

/// Left-hand side rewritten through G2(tau/2), G2(tau), G2(2 tau).
cplx entry22_lhs_g2(double a, double b, double c, const TauPoint& tau);

/// Right-hand side as a sum of 2F1 products in lambda.
cplx entry22_rhs(double a, double b, double c, cplx lambda);

/// (a - b + 1) lambda + c.
cplx entry22_target(double a, double b, double c, cplx lambda);

}  // namespace wtpr
