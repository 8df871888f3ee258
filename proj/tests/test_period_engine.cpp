#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chrono>

#include "oracle.hpp"
#include "wtpr/hypergeometric.hpp"
#include "wtpr/period_engine.hpp"

using namespace wtpr;
using oracle::e;
using oracle::rel;

namespace {

const HgParams kBase{0.30, 0.21, 0.77};

cplx sigma1_oracle(const HgParams& p, cplx tau) {
  const double a = p.alpha, b = p.beta, g = p.gamma;
  const cplx t2 = oracle::theta(2, 0.0, tau), t3 = oracle::theta(3, 0.0, tau), t4 = oracle::theta(4, 0.0, tau);
  return std::tgamma(a) * std::tgamma(g - a) / (2.0 * std::tgamma(g)) * std::pow(t2, 2.0 * g) *
         std::pow(t3, -2.0 * a - 2.0 * b) * std::pow(t4, -2.0 * g + 2.0 * a + 2.0 * b) *
         oracle::hyp2f1(a, b, g, std::pow(t2 / t3, 4));
}

HgParams draw_admissible(oracle::Draw& d) {
  HgParams p;
  do {
    p = {d.uniform(-2.0, 2.0), d.uniform(-2.0, 2.0), d.uniform(-2.0, 2.0)};
  } while (!admissible(p));
  return p;
}

}  // namespace

TEST_CASE("shift table") {
  CHECK(shift_rule(1).d_alpha == 0.5);
  CHECK(shift_rule(1).d_gamma == 1.0);
  CHECK(shift_rule(2).d_alpha == -0.5);
  CHECK(shift_rule(2).d_beta == 0.5);
  CHECK(shift_rule(3).d_alpha == 0.0);
  CHECK(shift_rule(3).d_beta == 0.0);
  CHECK(shift_rule(3).d_gamma == 0.0);
  CHECK(shift_rule(4).d_beta == 1.0);
  CHECK(shift_rule(4).d_gamma == 1.0);
  CHECK_THROWS_AS(shift_rule(0), std::out_of_range);
  CHECK_THROWS_AS(shift_rule(5), std::out_of_range);
}

TEST_CASE("phi_3 periods against the Gamma-theta-2F1 oracle") {
  const auto i = TauPoint::imaginary(1.0);
  const auto tc = theta_constants(i);
  const HgParams p = kBase;
  CHECK(rel(period_entry(3, 1, p, i), sigma1_oracle(p, i.tau())) < 1e-13);
  CHECK(rel(period_entry(3, 4, p, i) / period_entry(3, 1, p, i), 1.0 - e(p.gamma - p.alpha)) < 1e-13);

  const cplx s1 = period_entry(3, 1, p, tc), s3 = period_entry(3, 3, p, tc);
  const double a = p.alpha, b = p.beta, g = p.gamma;
  const cplx s2 = -((1.0 - e(a)) * s1 + e(2.0 * a + 2.0 * b - 2.0 * g) * (1.0 - e(g - b)) * s3) /
                  (e(2.0 * a - 2.0 * g) * (1.0 - e(g)));
  CHECK(rel(period_entry(3, 2, p, tc), s2) < 1e-13);

  oracle::Draw d(151);
  for (int k = 0; k < 20; ++k) {
    const TauPoint tp(d.tau(0.6, 2.5));
    const HgParams q = draw_admissible(d);
    if (std::abs(lambda_tau(tp)) > 0.8) continue;
    CHECK(rel(phi3_period(1, q, theta_constants(tp)), sigma1_oracle(q, tp.tau())) < 1e-11);
  }
}

TEST_CASE("shift consistency") {
  oracle::Draw d(157);
  for (int k = 0; k < 20; ++k) {
    const HgParams p = draw_admissible(d);
    const auto tc = theta_constants(TauPoint(d.tau(0.8, 2.0)));
    for (int i = 1; i <= 4; ++i)
      for (int j = 1; j <= 4; ++j) {
        const cplx base = phi3_period(j, apply_shift(i, p), tc);
        const cplx want = shift_rule(i).theta_normalized ? base * (tc.th3_0 * tc.th3_0) / (tc.th2_0 * tc.th2_0) : base;
        CHECK(period_entry(i, j, p, tc) == want);
      }
  }
}

TEST_CASE("period matrices") {
  oracle::Draw d(163);
  for (int k = 0; k < 20; ++k) {
    const HgParams p = k == 0 ? kBase : draw_admissible(d);
    const auto tc = theta_constants(TauPoint(k == 0 ? cplx{0.0, 1.0} : d.tau(0.8, 2.0)));
    const auto pp = period_matrix(Sign::plus, p, tc);
    const auto pm = period_matrix(Sign::minus, p, tc);
    CHECK(pm(2, 0) == period_entry(3, 1, p.negated(), tc));
    CHECK(pp(1, 2) == period_entry(2, 3, p, tc));
    for (int i = 1; i <= 4; ++i) {
      const auto s = apply_shift(i, p);
      CHECK(std::abs(pp(i - 1, 3) - (1.0 - e(s.gamma - s.alpha)) * pp(i - 1, 0)) <=
            1e-13 * std::max(1.0, std::abs(pp(i - 1, 3))));
    }

    const auto bp = block_periods(Sign::plus, p, tc);
    CHECK(bp.plus(0, 0) == period_entry(3, 1, p, tc));
    CHECK(bp.plus(0, 1) == period_entry(3, 3, p, tc));
    CHECK(bp.plus(1, 1) == period_entry(4, 3, p, tc));
    CHECK(bp.minus(0, 0) == period_entry(1, 1, p, tc));
    CHECK(bp.minus(1, 0) == period_entry(2, 1, p, tc));

    // in the eigen-basis of cycles the period matrices split into blocks
    const auto changed = pp * basis_change(p).full().transpose();
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c)
        if ((r < 2) != (c < 2)) CHECK(std::abs(changed(r, c)) <= 1e-10 * std::max(1.0, changed.max_abs()));
  }
  CHECK_THROWS_AS(period_matrix(Sign::plus, {0.30, 0.21, 1.0}, TauPoint::imaginary(1.0)), admissibility_error);
}

TEST_CASE("Wirtinger quadrature") {
  const auto i = TauPoint::imaginary(1.0);
  const auto tc = theta_constants(i);
  const HgParams p = kBase;
  const auto q = wirtinger_quadrature(p, i);
  const cplx lam = std::pow(oracle::theta(2, 0.0, i.tau()) / oracle::theta(3, 0.0, i.tau()), 4);
  const cplx want = std::tgamma(0.30) * std::tgamma(0.47) / std::tgamma(0.77) * oracle::hyp2f1(0.30, 0.21, 0.77, lam);
  CHECK(rel(q.value * wirtinger_prefactor(p, tc), want) < 1e-8);
  // the phi_3 period over sigma_1 is the same integral up to theta-constant powers
  const double a = p.alpha, b = p.beta, g = p.gamma;
  const cplx powers = std::pow(tc.th2_0, 2.0 * g) * std::pow(tc.th3_0, -2.0 * a - 2.0 * b) *
                      std::pow(tc.th4_0, -2.0 * g + 2.0 * a + 2.0 * b);
  CHECK(rel(period_entry(3, 1, p, tc), 0.5 * q.value * wirtinger_prefactor(p, tc) * powers) < 1e-8);

  CHECK_THROWS_AS(wirtinger_quadrature(p, TauPoint(cplx{0.3, 1.2})), std::invalid_argument);
  CHECK_THROWS_AS(wirtinger_quadrature({-0.2, 0.21, 0.77}, i), std::invalid_argument);
}

TEST_CASE("Wirtinger integrand symmetry at alpha = beta = gamma/2") {
  // u -> 1/2 - u swaps theta_1 with theta_2 and theta_3 with theta_4, so
  // mirrored pieces of (0, 1/2) agree when both exponent pairs coincide.
  // The pieces stop short of the endpoints, where the lattice sums lose
  // their relative accuracy.
  constexpr double eps = 1e-3;
  for (double im : {1.0, 1.3, 2.0}) {
    const cplx tau{0.0, im};
    const HgParams p{0.4, 0.4, 0.8};
    auto f = [&](double x, double, double) {
      const cplx u{x, 0.0};
      return std::pow(oracle::theta(1, u, tau).real(), 2.0 * p.alpha - 1.0) *
             std::pow(oracle::theta(2, u, tau).real(), 2.0 * p.gamma - 2.0 * p.alpha - 1.0) *
             std::pow(oracle::theta(3, u, tau).real(), 1.0 - 2.0 * p.beta) *
             std::pow(oracle::theta(4, u, tau).real(), 2.0 * p.beta - 2.0 * p.gamma + 1.0);
    };
    const double left = tanh_sinh(f, eps, 0.25).value;
    const double right = tanh_sinh(f, 0.25, 0.5 - eps).value;
    CHECK(std::abs(left - right) < 1e-10 * std::abs(left));
  }
}

TEST_CASE("Wirtinger quadrature on the convergence region") {
  oracle::Draw d(167);
  for (int k = 0; k < 20; ++k) {
    const double alpha = d.uniform(0.1, 0.9), rest = d.uniform(0.1, 0.9);
    const HgParams p{alpha, d.uniform(-2.0, 2.0), alpha + rest};
    if (!admissible(p)) continue;
    for (double im : {1.0, 1.3, 2.0}) {
      const auto tp = TauPoint::imaginary(im);
      const auto tc = theta_constants(tp);
      const auto start = std::chrono::steady_clock::now();
      const auto q = wirtinger_quadrature(p, tp);
      const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      CHECK(ms < 100.0);
      const cplx closed = std::tgamma(p.alpha) * std::tgamma(p.gamma - p.alpha) / std::tgamma(p.gamma) *
                          oracle::hyp2f1(p.alpha, p.beta, p.gamma, lambda_tau(tc));
      CHECK(rel(q.value * wirtinger_prefactor(p, tc), closed) < 1e-8);
    }
  }
}

TEST_CASE("Euler pairings") {
  oracle::Draw d(173);
  int tested = 0;
  while (tested < 10) {
    const double a = d.uniform(0.1, 0.9), b = d.uniform(0.1, 0.9);
    const double c = d.uniform(a + 0.1, std::min(b + 0.9, 1.9));
    if (std::abs(c - 1.0) < 0.05 || !admissible({a + 0.5, b - 0.5, c})) continue;
    const double z = 0.3 + 0.2 * (tested % 3);
    ++tested;
    const cplx zc{z, 0.0};

    const auto p1p = euler_pairing(EulerSide::p1_plus, a, b, c, zc);
    const double euler = std::tgamma(a) * std::tgamma(c - a) / std::tgamma(c);
    CHECK(rel(p1p.value, euler * oracle::hyp2f1(a, b, c, z)) < 1e-9);
    CHECK(rel(euler_pairing_closed(EulerSide::p1_plus, a, b, c, zc), euler * oracle::hyp2f1(a, b, c, z)) < 1e-12);

    const cplx p2p = euler_pairing(EulerSide::p2_plus, a, b, c, zc).value;
    const cplx p2m = euler_pairing(EulerSide::p2_minus, a, b, c, zc).value;
    CHECK(rel(p2p, euler_pairing_closed(EulerSide::p2_plus, a, b, c, zc)) < 1e-9);
    CHECK(rel(p2m, euler_pairing_closed(EulerSide::p2_minus, a, b, c, zc)) < 1e-9);
    const cplx p1m = euler_pairing_closed(EulerSide::p1_minus, a, b, c, zc);

    const cplx comb = euler_combination(a, b, c, p1p.value, p1m, p2p, p2m);
    const cplx want = 2.0 * kPi * kI / (a * (a + 1.0)) * ((a - b + 1.0) * z + c);
    CHECK(rel(comb, want) < 1e-8);
    CHECK(rel(euler_intersection_number(a, b, c, zc), want) < 1e-14);
    CHECK(rel(euler_product_form(a, b, c, zc), want) < 1e-10);
  }
  CHECK_THROWS_AS(euler_pairing(EulerSide::p1_plus, 0.3, 0.4, 0.9, cplx{1.2, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(euler_pairing(EulerSide::p1_minus, 0.3, 0.4, 0.9, cplx{0.5, 0.0}), std::invalid_argument);
  CHECK(std::string(to_string(EulerSide::p2_minus)) == "p2-");
}

TEST_CASE("entry (2,2) routes") {
  const double a = 0.2, b = 0.3, c = 0.6;
  for (double im : {1.0, 2.0}) {
    const auto tp = TauPoint::imaginary(im);
    const auto tc = theta_constants(tp);
    const cplx lam = std::pow(oracle::theta(2, 0.0, tp.tau()) / oracle::theta(3, 0.0, tp.tau()), 4);
    const cplx target = (a - b + 1.0) * lam + c;
    CHECK(std::abs(entry22_target(a, b, c, lambda_tau(tc)) - target) < 1e-14);
    CHECK(std::abs(entry22_lhs_theta(a, b, c, tc) - target) < 1e-9);
    CHECK(std::abs(entry22_rhs(a, b, c, lam) - target) < 1e-9);
    CHECK(std::abs(entry22_lhs_g2(a, b, c, tp) - entry22_lhs_theta(a, b, c, tc)) < 1e-10);
  }
}
