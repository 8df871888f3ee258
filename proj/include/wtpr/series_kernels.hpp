#pragma once

#include "wtpr/common.hpp"
#include "wtpr/power_series.hpp"

namespace wtpr {

/// A point tau of the upper half-plane, with the nomes q = e(tau) and
/// q_half = e(tau/2) cached.
///
/// Construction enforces Im(tau) >= kMinImagTau so that every q-series in
/// the library converges at least geometrically with ratio |q_half| <= 0.73.
class TauPoint {
 public:
  static constexpr double kMinImagTau = 0.1;

  explicit TauPoint(cplx tau);
  static TauPoint imaginary(double im) { return TauPoint(cplx{0.0, im}); }

  cplx tau() const noexcept { return tau_; }
  cplx q() const noexcept { return q_; }
  cplx q_half() const noexcept { return q_half_; }

 private:
  cplx tau_;
  cplx q_;
  cplx q_half_;
};

/// Theta values and derivatives at u = 0.
struct ThetaConstants {
  cplx th2_0, th3_0, th4_0;
  cplx th1p_0;    // theta_1'(0)
  cplx th1ppp_0;  // theta_1'''(0)
  cplx th2pp_0, th3pp_0, th4pp_0;
};

/// theta_j(u, tau), j = 1..4, in the convention theta_3(u) = sum_m e(m^2 tau/2 + m u),
/// theta_1 odd with theta_1'(0) > 0 on the imaginary axis. Pairs of lattice
/// terms are summed together (cos/sin form) until the pair magnitude falls
/// below 1e-17 of the partial sum.
cplx theta(int j, cplx u, const TauPoint& tau);

/// k-th u-derivative of theta_j at u, by termwise differentiation.
cplx theta_derivative(int j, int k, cplx u, const TauPoint& tau);

ThetaConstants theta_constants(const TauPoint& tau);

/// Modular lambda = theta_2(0)^4 / theta_3(0)^4.
cplx lambda_tau(const TauPoint& tau);
cplx lambda_tau(const ThetaConstants& tc);

/// Weight-2 Eisenstein series G2 = pi^2/3 - 8 pi^2 sum n q^n / (1 - q^n).
cplx eisenstein_g2(const TauPoint& tau);

enum class EllipticKind { sn, cn, dn, cs, ds, ns };

/// Jacobian elliptic function kind(2K u) written as a theta quotient in the
/// theta argument u, with K = pi theta_3(0)^2 / 2. Throws pole_error when the
/// theta factor in the denominator is below 1e-13 in magnitude.
cplx jacobi_elliptic(EllipticKind kind, cplx u, const TauPoint& tau);

/// 2K kind(2K u) for kind in {cs, ds, ns} from its trigonometric series
/// (cot/cosec term plus q-Fourier tail). Valid for real u in (0, 1).
cplx fourier_partial(EllipticKind kind, double u, const TauPoint& tau);

/// Taylor polynomial of theta_j around u = 0 up to u^order (order <= 12).
/// Odd/even parity zeros are exact.
PowerSeries theta_taylor(int j, int order, const TauPoint& tau);

inline constexpr int kMaxTaylorOrder = 12;

namespace detail {

/// Sums terms term(n) for n = first, first+1, ... onto `base` using the
/// library truncation policy: stop after at least 8 terms once
/// |term| < 1e-17 |partial|, hard cap 400 terms.
template <class Term>
cplx truncated_qsum(cplx base, int first, Term&& term) {
  constexpr int kMinTerms = 8;
  constexpr int kMaxTerms = 400;
  cplx sum = base;
  for (int i = 0; i < kMaxTerms; ++i) {
    const cplx t = term(first + i);
    sum += t;
    if (i + 1 >= kMinTerms && std::abs(t) <= 1e-17 * std::abs(sum)) return sum;
  }
  throw convergence_error("q-series did not converge within 400 terms");
}

}  // namespace detail

}  // namespace wtpr
