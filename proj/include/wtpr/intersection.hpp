#pragma once

#include <array>
#include <string>
#include <vector>

#include "wtpr/complex_matrix.hpp"
#include "wtpr/series_kernels.hpp"

namespace wtpr {

/// Real exponent triple (alpha, beta, gamma) of the Wirtinger integrand
///   T(u) = theta_1^{2a} theta_2^{2g-2a} theta_3^{-2b} theta_4^{2b-2g}
/// together with the derived exponents c0..c4 at the four 2-torsion points.
struct HgParams {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;

  double c0() const noexcept { return gamma; }
  double c1() const noexcept { return 2.0 * alpha; }
  double c2() const noexcept { return 2.0 * gamma - 2.0 * alpha; }
  double c3() const noexcept { return -2.0 * beta; }
  double c4() const noexcept { return 2.0 * beta - 2.0 * gamma; }

  HgParams negated() const noexcept { return {-alpha, -beta, -gamma}; }
  HgParams shifted(double da, double db, double dg) const noexcept { return {alpha + da, beta + db, gamma + dg}; }
};

struct Admissibility {
  std::vector<std::string> violations;
  bool ok() const noexcept { return violations.empty(); }
  explicit operator bool() const noexcept { return ok(); }
};

/// Checks every non-integrality hypothesis needed by the intersection and
/// period formulas (with kIntegralityGuard): c0..c4 not integers; alpha,
/// beta, gamma-alpha, gamma-beta not half-integers; the C-matrix and
/// entry-(2,2) denominators c1 -+ 1, c1, c2, c3, gamma, 1 -+ gamma nonzero.
Admissibility admissible(const HgParams& p);

/// Throws admissibility_error listing the violations.
void require_admissible(const HgParams& p);

/// 4x4 homology intersection matrix (I_h(sigma_i, sigma_j^vee)).
ComplexMatrix homology_H(const HgParams& p);

/// The (2,2) entry of the cohomology intersection matrix, without the 2 pi i factor.
cplx cohomology_c22(const HgParams& p, const ThetaConstants& tc);

/// 4x4 cohomology intersection matrix (I_c(phi_i, phi_j)).
ComplexMatrix cohomology_C(const HgParams& p, const ThetaConstants& tc);

/// Coefficients of sigma_{1 eps}, sigma_{2 eps} in the basis sigma_1..sigma_4.
struct BasisChange {
  std::array<std::array<cplx, 4>, 2> coeffs_minus;
  std::array<std::array<cplx, 4>, 2> coeffs_plus;

  /// 2x4 matrix whose rows are sigma_{1 eps}, sigma_{2 eps}.
  ComplexMatrix rows(Sign eps) const;
  /// 4x4 matrix with rows sigma_{1-}, sigma_{2-}, sigma_{1+}, sigma_{2+}.
  ComplexMatrix full() const;
};

BasisChange basis_change(const HgParams& p);

/// A pair of 2x2 blocks indexed by the involution eigenvalue.
struct EigenBlocks {
  ComplexMatrix minus;
  ComplexMatrix plus;
  const ComplexMatrix& operator[](Sign s) const noexcept { return s == Sign::plus ? plus : minus; }
};

/// Diagonal homology blocks H'(-1), H'(+1) in the eigen-basis.
EigenBlocks block_H_prime(const HgParams& p);

/// Cohomology blocks C(-1) (rows phi_1, phi_2) and C(+1) (rows phi_3, phi_4).
EigenBlocks block_C(const HgParams& p, const ThetaConstants& tc);

}  // namespace wtpr
