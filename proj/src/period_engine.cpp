#include "wtpr/period_engine.hpp"

#include "wtpr/hypergeometric.hpp"

namespace wtpr {

namespace {

// principal branch throughout
cplx cpow(cplx x, double e) { return std::exp(e * std::log(x)); }

// Gamma(x) Gamma(y) / Gamma(z) with z = x + y passed exactly: recomputing
// x + y in floating point costs digits when z sits near a pole.
double gamma_ratio(double x, double y, double z) { return gamma_real(x) * gamma_real(y) / gamma_real(z); }

void check_index(int k, const char* what) {
  if (k < 1 || k > 4) throw std::out_of_range(std::string(what) + " index must be in 1..4");
}

// The two independent phi_3 periods.
cplx phi3_sigma1(const HgParams& p, const ThetaConstants& tc, cplx lambda) {
  const double a = p.alpha, b = p.beta, g = p.gamma;
  return 0.5 * gamma_ratio(a, g - a, g) * cpow(tc.th2_0, 2.0 * g) * cpow(tc.th3_0, -2.0 * a - 2.0 * b) *
         cpow(tc.th4_0, -2.0 * g + 2.0 * a + 2.0 * b) * gauss_2f1(a, b, g, lambda);
}

cplx phi3_sigma3(const HgParams& p, const ThetaConstants& tc, cplx lambda) {
  const double a = p.alpha, b = p.beta, g = p.gamma;
  return -unit_phase(0.5 * (a + b - g)) * 0.5 * gamma_ratio(1.0 - b, 1.0 - g + b, 2.0 - g) * cpow(tc.th2_0, 4.0 - 2.0 * g) *
         cpow(tc.th3_0, 2.0 * a + 2.0 * b - 4.0) * cpow(tc.th4_0, 2.0 * g - 2.0 * a - 2.0 * b) *
         gauss_2f1(1.0 - b, 1.0 - a, 2.0 - g, lambda);
}

double real_pow(double x, double e) { return std::exp(e * std::log(x)); }

double theta_real(int j, double u, const TauPoint& tau) { return theta(j, cplx{u, 0.0}, tau).real(); }

void require_real_unit_interval(cplx z, const char* what) {
  if (z.imag() != 0.0 || !(z.real() > 0.0 && z.real() < 1.0)) {
    throw std::invalid_argument(std::string(what) + ": z must be real in (0,1)");
  }
}

}  // namespace

const ShiftRule& shift_rule(int i) {
  static const std::array<ShiftRule, 4> rules = {{
      {0.5, 0.5, 1.0, true},
      {-0.5, 0.5, 0.0, false},
      {0.0, 0.0, 0.0, false},
      {0.0, 1.0, 1.0, true},
  }};
  check_index(i, "cocycle");
  return rules[static_cast<std::size_t>(i - 1)];
}

HgParams apply_shift(int i, const HgParams& p) {
  const auto& r = shift_rule(i);
  return p.shifted(r.d_alpha, r.d_beta, r.d_gamma);
}

cplx phi3_period(int j, const HgParams& p, const ThetaConstants& tc) {
  check_index(j, "cycle");
  const cplx lambda = lambda_tau(tc);
  const double a = p.alpha, b = p.beta, g = p.gamma;
  switch (j) {
    case 1:
      return phi3_sigma1(p, tc, lambda);
    case 3:
      return phi3_sigma3(p, tc, lambda);
    case 4:
      return (1.0 - unit_phase(g - a)) * phi3_sigma1(p, tc, lambda);
    default: {
      const cplx s1 = phi3_sigma1(p, tc, lambda);
      const cplx s3 = phi3_sigma3(p, tc, lambda);
      const cplx denom = unit_phase(2.0 * a - 2.0 * g) * (1.0 - unit_phase(g));
      return -((1.0 - unit_phase(a)) * s1 + unit_phase(2.0 * a + 2.0 * b - 2.0 * g) * (1.0 - unit_phase(g - b)) * s3) /
             denom;
    }
  }
}

cplx period_entry(int i, int j, const HgParams& p, const ThetaConstants& tc) {
  require_admissible(p);
  const auto& rule = shift_rule(i);
  const cplx value = phi3_period(j, apply_shift(i, p), tc);
  if (!rule.theta_normalized) return value;
  return value * (tc.th3_0 * tc.th3_0) / (tc.th2_0 * tc.th2_0);
}

cplx period_entry(int i, int j, const HgParams& p, const TauPoint& tau) {
  return period_entry(i, j, p, theta_constants(tau));
}

ComplexMatrix period_matrix(Sign sign, const HgParams& p, const ThetaConstants& tc) {
  require_admissible(p);
  const HgParams q = (sign == Sign::plus) ? p : p.negated();
  ComplexMatrix m(4, 4);
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j) m(i - 1, j - 1) = period_entry(i, j, q, tc);
  return m;
}

ComplexMatrix period_matrix(Sign sign, const HgParams& p, const TauPoint& tau) {
  return period_matrix(sign, p, theta_constants(tau));
}

EigenBlocks block_periods(Sign sign, const HgParams& p, const ThetaConstants& tc) {
  const ComplexMatrix full = period_matrix(sign, p, tc);
  return {full.submatrix(0, 2, {0, 2}), full.submatrix(2, 2, {0, 2})};
}

EigenBlocks block_periods(Sign sign, const HgParams& p, const TauPoint& tau) {
  return block_periods(sign, p, theta_constants(tau));
}

QuadratureResult wirtinger_quadrature(const HgParams& p, const TauPoint& tau, const QuadratureConfig& cfg) {
  if (tau.tau().real() != 0.0) throw std::invalid_argument("wirtinger_quadrature: tau must be purely imaginary");
  if (!(p.alpha > 0.0) || !(p.gamma - p.alpha > 0.0)) {
    throw std::invalid_argument("wirtinger_quadrature: need alpha > 0 and gamma - alpha > 0");
  }
  require_admissible(p);
  const double e1 = 2.0 * p.alpha - 1.0;
  const double e2 = 2.0 * p.gamma - 2.0 * p.alpha - 1.0;
  const double e3 = 1.0 - 2.0 * p.beta;
  const double e4 = 2.0 * p.beta - 2.0 * p.gamma + 1.0;
  auto integrand = [&](double x, double left, double right) {
    double t1, t2, t3, t4;
    if (left <= right) {
      t1 = theta_real(1, left, tau);
      t2 = theta_real(2, x, tau);
      t3 = theta_real(3, x, tau);
      t4 = theta_real(4, x, tau);
    } else {
      // reflect u = 1/2 - d so the vanishing factor is evaluated at small d
      t1 = theta_real(2, right, tau);
      t2 = theta_real(1, right, tau);
      t3 = theta_real(4, right, tau);
      t4 = theta_real(3, right, tau);
    }
    return real_pow(t1, e1) * real_pow(t2, e2) * real_pow(t3, e3) * real_pow(t4, e4);
  };
  return tanh_sinh(integrand, 0.0, 0.5, cfg);
}

cplx wirtinger_prefactor(const HgParams& p, const ThetaConstants& tc) {
  const cplx lambda = lambda_tau(tc);
  return 2.0 * kPi * tc.th3_0 * tc.th3_0 * cpow(lambda, 0.5 * (1.0 - p.gamma)) *
         cpow(1.0 - lambda, 0.5 * (p.gamma - p.alpha - p.beta));
}

const char* to_string(EulerSide s) {
  switch (s) {
    case EulerSide::p1_plus: return "p1+";
    case EulerSide::p2_plus: return "p2+";
    case EulerSide::p1_minus: return "p1-";
    case EulerSide::p2_minus: return "p2-";
  }
  return "?";
}

QuadratureResult euler_pairing(EulerSide side, double a, double b, double c, cplx z, const QuadratureConfig& cfg) {
  require_real_unit_interval(z, "euler_pairing");
  const double x = z.real();
  // integrand s^{e0} (1-s)^{e1} (1 - x s)^{e2} on (0,1), times a constant
  double e0 = 0.0, e1 = 0.0, e2 = 0.0, scale = 1.0;
  switch (side) {
    case EulerSide::p1_plus:
      e0 = a - 1.0, e1 = c - a - 1.0, e2 = -b;
      break;
    case EulerSide::p1_minus:
      e0 = -a - 2.0, e1 = a - c, e2 = b - 1.0;
      break;
    case EulerSide::p2_plus:
      e0 = b - c, e1 = -b, e2 = c - a - 1.0, scale = -real_pow(x, 1.0 - c);
      break;
    case EulerSide::p2_minus:
      e0 = c - b + 1.0, e1 = b - 1.0, e2 = a - c, scale = -real_pow(x, 1.0 + c);
      break;
  }
  if (!(e0 > -1.0) || !(e1 > -1.0)) {
    throw std::invalid_argument(std::string("euler_pairing: endpoint exponent <= -1 for ") + to_string(side));
  }
  auto integrand = [&](double s, double left, double right) {
    return real_pow(left, e0) * real_pow(right, e1) * real_pow(1.0 - x * s, e2);
  };
  QuadratureResult r = tanh_sinh(integrand, 0.0, 1.0, cfg);
  r.value *= scale;
  r.last_difference *= std::abs(scale);
  return r;
}

cplx euler_pairing_closed(EulerSide side, double a, double b, double c, cplx z) {
  switch (side) {
    case EulerSide::p1_plus:
      return gamma_ratio(a, c - a, c) * gauss_2f1(a, b, c, z);
    case EulerSide::p1_minus:
      return gamma_ratio(-a - 1.0, a - c + 1.0, -c) * gauss_2f1(-a - 1.0, 1.0 - b, -c, z);
    case EulerSide::p2_plus:
      return -cpow(z, 1.0 - c) * gamma_ratio(b - c + 1.0, 1.0 - b, 2.0 - c) * gauss_2f1(1.0 + a - c, b - c + 1.0, 2.0 - c, z);
    case EulerSide::p2_minus:
      return -cpow(z, 1.0 + c) * gamma_ratio(c - b + 2.0, b, c + 2.0) * gauss_2f1(c - a, c - b + 2.0, c + 2.0, z);
  }
  throw std::invalid_argument("euler_pairing_closed: unknown side");
}

cplx euler_combination(double a, double b, double c, cplx p1p, cplx p1m, cplx p2p, cplx p2m) {
  const cplx k1 = (1.0 - unit_phase(a)) * (1.0 - unit_phase(c - a)) / (1.0 - unit_phase(c));
  const cplx k2 = (1.0 - unit_phase(-b)) * (1.0 - unit_phase(b - c)) / (1.0 - unit_phase(-c));
  return k1 * p1p * p1m + k2 * p2p * p2m;
}

cplx euler_intersection_number(double a, double b, double c, cplx z) {
  return 2.0 * kPi * kI * ((a - b + 1.0) * z + c) / (a * (a + 1.0));
}

cplx euler_product_form(double a, double b, double c, cplx z) {
  const cplx two_pi_i = 2.0 * kPi * kI;
  return two_pi_i * c / (a * (a + 1.0)) * gauss_2f1(a, b, c, z) * gauss_2f1(-a - 1.0, 1.0 - b, -c, z) +
         two_pi_i * (c - b) * (c - b + 1.0) / (c * (1.0 + c) * (1.0 - c)) * z * z *
             gauss_2f1(a + 2.0, b, 2.0 + c, z) * gauss_2f1(1.0 - a, 1.0 - b, 2.0 - c, z);
}

cplx entry22_lhs_theta(double a, double b, double c, const ThetaConstants& tc) {
  const cplx t3sq = tc.th3_0 * tc.th3_0;
  const cplx bracket = -(2.0 * a + 1.0) * tc.th1ppp_0 / tc.th1p_0 + (2.0 * a - 2.0 * c + 1.0) * tc.th2pp_0 / tc.th2_0 +
                       (2.0 * b - 1.0) * tc.th3pp_0 / tc.th3_0 +
                       (4.0 * a - 2.0 * b + 2.0 * c + 3.0) * tc.th4pp_0 / tc.th4_0;
  return bracket / (2.0 * kPi * kPi * t3sq * t3sq);
}

cplx entry22_lhs_g2(double a, double b, double c, const TauPoint& tau) {
  const cplx g_half = eisenstein_g2(TauPoint(0.5 * tau.tau()));
  const cplx g1 = eisenstein_g2(tau);
  const cplx g_double = eisenstein_g2(TauPoint(2.0 * tau.tau()));
  const cplx t3 = theta(3, 0.0, tau);
  const cplx t3sq = t3 * t3;
  const cplx bracket = 2.0 * (a - b + c + 1.0) * (2.0 * g_double - g1) -
                       2.0 * (a - b + 1.0) * (4.0 * g_double + g_half - 4.0 * g1) + c * (2.0 * g1 - g_half);
  return bracket / (kPi * kPi * t3sq * t3sq);
}

cplx entry22_rhs(double a, double b, double c, cplx lambda) {
  return c * gauss_2f1(a, b, c, lambda) * gauss_2f1(-a - 1.0, 1.0 - b, -c, lambda) +
         a * (a + 1.0) * (c - b) * (c - b + 1.0) / (c * (1.0 + c) * (1.0 - c)) * lambda * lambda *
             gauss_2f1(a + 2.0, b, 2.0 + c, lambda) * gauss_2f1(1.0 - a, 1.0 - b, 2.0 - c, lambda);
}

cplx entry22_target(double a, double b, double c, cplx lambda) { return (a - b + 1.0) * lambda + c; }

}  // namespace wtpr
