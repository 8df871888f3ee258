#include "wtpr/series_kernels.hpp"

#include <limits>
#include <string>

namespace wtpr {

TauPoint::TauPoint(cplx tau) : tau_(tau) {
  if (!std::isfinite(tau.real()) || !std::isfinite(tau.imag())) {
    throw range_error("TauPoint: non-finite tau");
  }
  if (tau.imag() < kMinImagTau) {
    throw range_error("TauPoint: Im(tau) = " + std::to_string(tau.imag()) +
                      " below the supported floor 0.1");
  }
  q_ = unit_phase(tau);
  q_half_ = unit_phase(0.5 * tau);
}

namespace {

void check_index(int j) {
  if (j < 1 || j > 4) throw std::invalid_argument("theta index must be in 1..4, got " + std::to_string(j));
}

// k-th derivative of sin (is_sine) or cos evaluated at x, without the
// chain-rule factor.
cplx trig_derivative(bool is_sine, int k, cplx x) {
  const int phase = (k + (is_sine ? 0 : 1)) % 4;
  switch (phase) {
    case 0: return std::sin(x);
    case 1: return std::cos(x);
    case 2: return -std::sin(x);
    default: return -std::cos(x);
  }
}

}  // namespace

cplx theta_derivative(int j, int k, cplx u, const TauPoint& tau) {
  check_index(j);
  if (k < 0) throw std::invalid_argument("theta_derivative: negative order");
  if (!std::isfinite(u.real()) || !std::isfinite(u.imag())) {
    throw std::invalid_argument("theta: non-finite argument u");
  }
  // theta_1 = 2 sum (-1)^n Q^{(n+1/2)^2} sin((2n+1) pi u)
  // theta_2 = 2 sum        Q^{(n+1/2)^2} cos((2n+1) pi u)
  // theta_3 = 1 + 2 sum        Q^{n^2} cos(2 n pi u)
  // theta_4 = 1 + 2 sum (-1)^n Q^{n^2} cos(2 n pi u),   Q = e(tau/2)
  const bool half_integer = (j <= 2);
  const bool is_sine = (j == 1);
  const bool alternating = (j == 1 || j == 4);
  cplx sum = (!half_integer && k == 0) ? cplx{1.0} : cplx{};
  const double im_u = std::abs(u.imag());

  constexpr int kMinTerms = 8;
  constexpr int kMaxTerms = 400;
  const int first = half_integer ? 0 : 1;
  for (int i = 0; i < kMaxTerms; ++i) {
    const int n = first + i;
    const double h = half_integer ? n + 0.5 : static_cast<double>(n);
    const double omega = 2.0 * kPi * h;
    const cplx nome_power = std::exp(kI * kPi * (h * h) * tau.tau());
    const double omega_k = std::pow(omega, k);
    const double sign = (alternating && (n % 2 != 0)) ? -1.0 : 1.0;
    sum += 2.0 * sign * nome_power * omega_k * trig_derivative(is_sine, k, omega * u);

    const double bound = 2.0 * std::abs(nome_power) * omega_k * std::cosh(omega * im_u);
    if (!std::isfinite(bound)) throw range_error("theta: argument too far from the real axis");
    if (i + 1 >= kMinTerms &&
        (bound <= 1e-17 * std::abs(sum) || bound < std::numeric_limits<double>::min())) {
      return sum;
    }
  }
  throw convergence_error("theta series did not converge within 400 terms");
}

cplx theta(int j, cplx u, const TauPoint& tau) {
  return theta_derivative(j, 0, u, tau);
}

ThetaConstants theta_constants(const TauPoint& tau) {
  ThetaConstants tc;
  tc.th2_0 = theta_derivative(2, 0, 0.0, tau);
  tc.th3_0 = theta_derivative(3, 0, 0.0, tau);
  tc.th4_0 = theta_derivative(4, 0, 0.0, tau);
  tc.th1p_0 = theta_derivative(1, 1, 0.0, tau);
  tc.th1ppp_0 = theta_derivative(1, 3, 0.0, tau);
  tc.th2pp_0 = theta_derivative(2, 2, 0.0, tau);
  tc.th3pp_0 = theta_derivative(3, 2, 0.0, tau);
  tc.th4pp_0 = theta_derivative(4, 2, 0.0, tau);
  return tc;
}

cplx lambda_tau(const ThetaConstants& tc) {
  const cplx r = tc.th2_0 / tc.th3_0;
  const cplx r2 = r * r;
  return r2 * r2;
}

cplx lambda_tau(const TauPoint& tau) {
  const cplx r = theta(2, 0.0, tau) / theta(3, 0.0, tau);
  const cplx r2 = r * r;
  return r2 * r2;
}

cplx eisenstein_g2(const TauPoint& tau) {
  const double pi2 = kPi * kPi;
  return detail::truncated_qsum(pi2 / 3.0, 1, [&](int n) {
    const cplx qn = unit_phase(static_cast<double>(n) * tau.tau());
    return -8.0 * pi2 * static_cast<double>(n) * qn / (1.0 - qn);
  });
}

namespace {

constexpr double kPoleThreshold = 1e-13;

const char* kind_name(EllipticKind kind) {
  switch (kind) {
    case EllipticKind::sn: return "sn";
    case EllipticKind::cn: return "cn";
    case EllipticKind::dn: return "dn";
    case EllipticKind::cs: return "cs";
    case EllipticKind::ds: return "ds";
    case EllipticKind::ns: return "ns";
  }
  return "?";
}

void check_denominator(EllipticKind kind, int j, cplx value) {
  if (std::abs(value) < kPoleThreshold) {
    throw pole_error(std::string("pole of ") + kind_name(kind) + ": |theta_" + std::to_string(j) +
                     "(u)| = " + std::to_string(std::abs(value)));
  }
}

}  // namespace

cplx jacobi_elliptic(EllipticKind kind, cplx u, const TauPoint& tau) {
  const cplx t2 = theta(2, 0.0, tau);
  const cplx t3 = theta(3, 0.0, tau);
  const cplx t4 = theta(4, 0.0, tau);
  switch (kind) {
    case EllipticKind::sn:
    case EllipticKind::cn:
    case EllipticKind::dn: {
      const cplx d = theta(4, u, tau);
      check_denominator(kind, 4, d);
      if (kind == EllipticKind::sn) return (t3 / t2) * theta(1, u, tau) / d;
      if (kind == EllipticKind::cn) return (t4 / t2) * theta(2, u, tau) / d;
      return (t4 / t3) * theta(3, u, tau) / d;
    }
    case EllipticKind::cs:
    case EllipticKind::ds:
    case EllipticKind::ns: {
      const cplx d = theta(1, u, tau);
      check_denominator(kind, 1, d);
      if (kind == EllipticKind::cs) return (t4 / t3) * theta(2, u, tau) / d;
      if (kind == EllipticKind::ds) return (t2 * t4 / (t3 * t3)) * theta(3, u, tau) / d;
      return (t2 / t3) * theta(4, u, tau) / d;
    }
  }
  throw std::invalid_argument("jacobi_elliptic: unknown kind");
}

cplx fourier_partial(EllipticKind kind, double u, const TauPoint& tau) {
  if (!std::isfinite(u) || u <= 0.0 || u >= 1.0) {
    throw range_error("fourier_partial: u must lie in the open interval (0, 1)");
  }
  const cplx t = tau.tau();
  switch (kind) {
    case EllipticKind::cs:
      return detail::truncated_qsum(kPi / std::tan(kPi * u), 1, [&](int n) {
        const cplx qn = unit_phase(static_cast<double>(n) * t);
        return -4.0 * kPi * qn * std::sin(2.0 * n * kPi * u) / (1.0 + qn);
      });
    case EllipticKind::ds:
    case EllipticKind::ns: {
      // ds: -4 pi sum q^{n-1/2} sin / (1 + q^{n-1/2});  ns: +4 pi sum ... / (1 - q^{n-1/2})
      const double sign = (kind == EllipticKind::ds) ? -1.0 : 1.0;
      return detail::truncated_qsum(kPi / std::sin(kPi * u), 1, [&](int n) {
        const cplx qh = unit_phase((n - 0.5) * t);
        return sign * 4.0 * kPi * qh * std::sin((2.0 * n - 1.0) * kPi * u) / (1.0 - sign * qh);
      });
    }
    default:
      throw std::invalid_argument("fourier_partial: kind must be cs, ds or ns");
  }
}

PowerSeries theta_taylor(int j, int order, const TauPoint& tau) {
  check_index(j);
  if (order < 0 || order > kMaxTaylorOrder) {
    throw range_error("theta_taylor: order must be in 0..12");
  }
  std::vector<cplx> c(static_cast<std::size_t>(order) + 1);
  double factorial = 1.0;
  for (int k = 0; k <= order; ++k) {
    if (k > 0) factorial *= k;
    const bool odd = (k % 2 != 0);
    const bool vanishes = (j == 1) ? !odd : odd;
    c[k] = vanishes ? cplx{} : theta_derivative(j, k, 0.0, tau) / factorial;
  }
  return PowerSeries(std::move(c));
}

}  // namespace wtpr
