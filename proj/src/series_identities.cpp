#include "wtpr/series_identities.hpp"

namespace wtpr {

namespace {

const double kPi2 = kPi * kPi;

cplx qpow(double n, const TauPoint& tau) { return unit_phase(n * tau.tau()); }

void check_ratio_index(int j) {
  if (j < 1 || j > 4) throw std::invalid_argument("theta ratio index must be in 1..4");
}

}  // namespace

cplx theta_ratio_termwise(int j, const ThetaConstants& tc) {
  check_ratio_index(j);
  switch (j) {
    case 1: return tc.th1ppp_0 / tc.th1p_0;
    case 2: return tc.th2pp_0 / tc.th2_0;
    case 3: return tc.th3pp_0 / tc.th3_0;
    default: return tc.th4pp_0 / tc.th4_0;
  }
}

cplx theta_ratio_lambert(int j, const TauPoint& tau) {
  check_ratio_index(j);
  switch (j) {
    case 1:
      return kPi2 * detail::truncated_qsum(-1.0, 1, [&](int n) {
        const cplx qn = qpow(n, tau);
        return 24.0 * qn / ((1.0 - qn) * (1.0 - qn));
      });
    case 2:
      return kPi2 * detail::truncated_qsum(-1.0, 1, [&](int n) {
        const cplx qn = qpow(n, tau);
        return -8.0 * qn / ((1.0 + qn) * (1.0 + qn));
      });
    default: {
      const double s = (j == 3) ? 1.0 : -1.0;  // theta_3: 1 + q^{n-1/2}; theta_4: 1 - q^{n-1/2}
      const cplx sum = detail::truncated_qsum(0.0, 1, [&](int n) {
        const cplx qh = qpow(n - 0.5, tau);
        return qh / ((1.0 + s * qh) * (1.0 + s * qh));
      });
      return -s * 8.0 * kPi2 * sum;
    }
  }
}

cplx theta_ratio_g2(int j, const TauPoint& tau) {
  check_ratio_index(j);
  const cplx g1 = eisenstein_g2(tau);
  if (j == 1) return -3.0 * g1;
  if (j == 2) return -4.0 * eisenstein_g2(TauPoint(2.0 * tau.tau())) + g1;
  const cplx g_half = eisenstein_g2(TauPoint(0.5 * tau.tau()));
  if (j == 3) return 4.0 * eisenstein_g2(TauPoint(2.0 * tau.tau())) - 5.0 * g1 + g_half;
  return g1 - g_half;
}

cplx theta_ratio_divisor(int j, const TauPoint& tau) {
  check_ratio_index(j);
  auto alt = [](int n) { return (n % 2 == 0) ? 1.0 : -1.0; };
  switch (j) {
    case 1:
      return kPi2 * detail::truncated_qsum(-1.0, 1, [&](int n) {
        const cplx qn = qpow(n, tau);
        return 24.0 * n * qn / (1.0 - qn);
      });
    case 2:
      return kPi2 * detail::truncated_qsum(-1.0, 1, [&](int n) {
        const cplx qn = qpow(n, tau);
        return 8.0 * alt(n) * n * qn / (1.0 - qn);
      });
    case 3:
      return 8.0 * kPi2 * detail::truncated_qsum(0.0, 1, [&](int n) {
        return alt(n) * n * qpow(0.5 * n, tau) / (1.0 - qpow(n, tau));
      });
    default:
      return 8.0 * kPi2 * detail::truncated_qsum(0.0, 1, [&](int n) {
        return static_cast<double>(n) * qpow(0.5 * n, tau) / (1.0 - qpow(n, tau));
      });
  }
}

cplx lambda_qsum(EllipticKind kind, const TauPoint& tau) {
  switch (kind) {
    case EllipticKind::cs:
      return detail::truncated_qsum(1.0, 1, [&](int n) {
        const cplx qn = qpow(n, tau);
        return 24.0 * n * qn / (1.0 + qn);
      });
    case EllipticKind::ds:
    case EllipticKind::ns: {
      const double s = (kind == EllipticKind::ds) ? 1.0 : -1.0;
      return detail::truncated_qsum(1.0, 1, [&](int n) {
        const cplx qh = qpow(n - 0.5, tau);
        return -s * 24.0 * (2.0 * n - 1.0) * qh / (1.0 + s * qh);
      });
    }
    default:
      throw std::invalid_argument("lambda_qsum: kind must be cs, ds or ns");
  }
}

namespace {

cplx lambda_factor(EllipticKind kind, cplx lambda) {
  switch (kind) {
    case EllipticKind::cs: return 1.0 - 0.5 * lambda;
    case EllipticKind::ds: return 1.0 - 2.0 * lambda;
    case EllipticKind::ns: return 1.0 + lambda;
    default: throw std::invalid_argument("kind must be cs, ds or ns");
  }
}

cplx theta3_fourth(const ThetaConstants& tc) {
  const cplx t2 = tc.th3_0 * tc.th3_0;
  return t2 * t2;
}

}  // namespace

cplx lambda_theta3_form(EllipticKind kind, const ThetaConstants& tc) {
  return lambda_factor(kind, lambda_tau(tc)) * theta3_fourth(tc);
}

cplx g2_combination(EllipticKind kind, const TauPoint& tau) {
  const cplx g1 = eisenstein_g2(tau);
  switch (kind) {
    case EllipticKind::cs:
      return 2.0 * eisenstein_g2(TauPoint(2.0 * tau.tau())) - g1;
    case EllipticKind::ds:
      return 4.0 * eisenstein_g2(TauPoint(2.0 * tau.tau())) + eisenstein_g2(TauPoint(0.5 * tau.tau())) -
             4.0 * g1;
    case EllipticKind::ns:
      return 2.0 * g1 - eisenstein_g2(TauPoint(0.5 * tau.tau()));
    default:
      throw std::invalid_argument("g2_combination: kind must be cs, ds or ns");
  }
}

cplx laurent_u1_qseries(EllipticKind kind, const TauPoint& tau) {
  const cplx s = lambda_qsum(kind, tau);
  return (kind == EllipticKind::cs) ? -(kPi2 / 3.0) * s : (kPi2 / 6.0) * s;
}

cplx laurent_u1_lambda(EllipticKind kind, const ThetaConstants& tc) {
  const cplx lambda = lambda_tau(tc);
  cplx factor;
  switch (kind) {
    case EllipticKind::cs: factor = -1.0 / 3.0 + lambda / 6.0; break;
    case EllipticKind::ds: factor = 1.0 / 6.0 - lambda / 3.0; break;
    case EllipticKind::ns: factor = 1.0 / 6.0 + lambda / 6.0; break;
    default: throw std::invalid_argument("laurent_u1_lambda: kind must be cs, ds or ns");
  }
  const cplx two_k = kPi * tc.th3_0 * tc.th3_0;
  return factor * two_k * two_k;
}

PowerSeries elliptic_laurent(EllipticKind kind, const TauPoint& tau, int order) {
  const PowerSeries s1 = theta_taylor(1, order, tau);
  const cplx t2 = theta_taylor(2, 0, tau).coefficient(0);
  const cplx t3 = theta_taylor(3, 0, tau).coefficient(0);
  const cplx t4 = theta_taylor(4, 0, tau).coefficient(0);
  const cplx two_k = kPi * t3 * t3;
  switch (kind) {
    case EllipticKind::cs: return (two_k * t4 / t3) * (theta_taylor(2, order, tau) / s1);
    case EllipticKind::ds: return (two_k * t2 * t4 / (t3 * t3)) * (theta_taylor(3, order, tau) / s1);
    case EllipticKind::ns: return (two_k * t2 / t3) * (theta_taylor(4, order, tau) / s1);
    default: throw std::invalid_argument("elliptic_laurent: kind must be cs, ds or ns");
  }
}

cplx laurent_u1_taylor(EllipticKind kind, const TauPoint& tau) {
  return elliptic_laurent(kind, tau).coefficient(1);
}

PowerSeries phi2_laurent(const TauPoint& tau, int order) {
  const PowerSeries s1 = theta_taylor(1, order, tau);
  const PowerSeries s4 = theta_taylor(4, order, tau);
  const cplx t2 = theta_taylor(2, 0, tau).coefficient(0);
  return (kPi * t2 * t2) * ((s4 * s4) / (s1 * s1));
}

Phi2Leading phi2_closed_form(const ThetaConstants& tc) {
  const cplx lead = 1.0 / (kPi * tc.th3_0 * tc.th3_0);
  return {lead, lead * (tc.th4pp_0 / tc.th4_0 - tc.th1ppp_0 / (3.0 * tc.th1p_0))};
}

}  // namespace wtpr
