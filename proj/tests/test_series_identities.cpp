#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>

#include "oracle.hpp"
#include "wtpr/series_identities.hpp"

using namespace wtpr;
using oracle::rel;

namespace {

using Fn = std::function<cplx(cplx)>;

/// Coefficient of u^k of f around 0 by the trapezoidal rule on |u| = r.
cplx contour_coefficient(const Fn& f, int k, double r = 0.1, int nodes = 128) {
  cplx sum = 0.0;
  for (int m = 0; m < nodes; ++m) {
    const cplx u = std::polar(r, 2.0 * kPi * m / nodes);
    sum += f(u) * std::pow(u, -k);
  }
  return sum / static_cast<double>(nodes);
}

/// 2K kind(2K u) from lattice-sum thetas.
Fn elliptic_oracle(EllipticKind kind, cplx tau) {
  const cplx t2 = oracle::theta(2, 0.0, tau), t3 = oracle::theta(3, 0.0, tau), t4 = oracle::theta(4, 0.0, tau);
  const cplx two_k = kPi * t3 * t3;
  return [=](cplx u) -> cplx {
    const cplx s1 = oracle::theta(1, u, tau);
    switch (kind) {
      case EllipticKind::cs: return two_k * t4 * oracle::theta(2, u, tau) / (t3 * s1);
      case EllipticKind::ds: return two_k * t4 * t2 * oracle::theta(3, u, tau) / (t3 * t3 * s1);
      default: return two_k * t2 * oracle::theta(4, u, tau) / (t3 * s1);
    }
  };
}

cplx lambda_factor(EllipticKind kind, cplx lam) {
  switch (kind) {
    case EllipticKind::cs: return 1.0 - lam / 2.0;
    case EllipticKind::ds: return 1.0 - 2.0 * lam;
    default: return 1.0 + lam;
  }
}

constexpr EllipticKind kKinds[] = {EllipticKind::cs, EllipticKind::ds, EllipticKind::ns};

}  // namespace

TEST_CASE("log-derivative ratios: four routes and the lattice oracle") {
  oracle::Draw d(71);
  for (int k = 0; k < 20; ++k) {
    const TauPoint tp(d.tau(0.5, 3.0));
    const auto tc = theta_constants(tp);
    const cplx tau = tp.tau();
    const cplx want1 = oracle::theta(1, 0.0, tau, 3) / oracle::theta(1, 0.0, tau, 1);
    CHECK(rel(theta_ratio_termwise(1, tc), want1) < 1e-11);
    CHECK(rel(theta_ratio_lambert(1, tp), want1) < 1e-11);
    for (int j = 2; j <= 4; ++j) {
      const cplx want = oracle::theta(j, 0.0, tau, 2) / oracle::theta(j, 0.0, tau);
      CHECK(rel(theta_ratio_termwise(j, tc), want) < 1e-11);
      CHECK(rel(theta_ratio_lambert(j, tp), want) < 1e-11);
      CHECK(rel(theta_ratio_g2(j, tp), want) < 1e-11);
      CHECK(rel(theta_ratio_divisor(j, tp), want) < 1e-11);
    }
    // theta_1'''/theta_1' is the sum of the other three
    const cplx sum = theta_ratio_g2(2, tp) + theta_ratio_g2(3, tp) + theta_ratio_g2(4, tp);
    CHECK(rel(theta_ratio_lambert(1, tp), sum) < 1e-11);
  }
}

TEST_CASE("theta_2 ratio tends to -pi^2") {
  CHECK(std::abs(theta_ratio_lambert(2, TauPoint::imaginary(6.0)) + kPi * kPi) < 1e-10);
}

TEST_CASE("lambda-theta_3 and G2 identities") {
  oracle::Draw d(73);
  for (int k = 0; k < 20; ++k) {
    const TauPoint tp(d.tau(0.5, 3.0));
    const auto tc = theta_constants(tp);
    const cplx t2 = oracle::theta(2, 0.0, tp.tau()), t3 = oracle::theta(3, 0.0, tp.tau());
    const cplx lam = std::pow(t2 / t3, 4);
    for (auto kind : kKinds) {
      const cplx want = lambda_factor(kind, lam) * std::pow(t3, 4);
      CHECK(rel(lambda_theta3_form(kind, tc), want) < 1e-12);
      CHECK(rel(lambda_qsum(kind, tp), want) < 1e-11);
      CHECK(rel(g2_combination(kind, tp), kPi * kPi / 3.0 * want) < 1e-11);
    }
  }
}

TEST_CASE("u^1 Laurent coefficients against a contour integral") {
  oracle::Draw d(79);
  for (int k = 0; k < 8; ++k) {
    const TauPoint tp(d.tau(0.6, 2.5));
    const auto tc = theta_constants(tp);
    for (auto kind : kKinds) {
      const cplx want = contour_coefficient(elliptic_oracle(kind, tp.tau()), 1);
      CHECK(rel(laurent_u1_qseries(kind, tp), want) < 1e-10);
      CHECK(rel(laurent_u1_lambda(kind, tc), want) < 1e-10);
      CHECK(rel(laurent_u1_taylor(kind, tp), want) < 1e-10);
      const auto series = elliptic_laurent(kind, tp);
      CHECK(series.valuation() == -1);
      CHECK(std::abs(series.coefficient(-1) - 1.0) < 1e-12);
      CHECK(std::abs(series.coefficient(0)) == 0.0);
    }
  }
}

TEST_CASE("phi_2 Laurent expansion") {
  oracle::Draw d(83);
  for (int k = 0; k < 8; ++k) {
    const TauPoint tp(d.tau(0.6, 2.5));
    const auto tc = theta_constants(tp);
    const cplx tau = tp.tau();
    const cplx t2 = oracle::theta(2, 0.0, tau), t3 = oracle::theta(3, 0.0, tau);
    const Fn f = [&](cplx u) {
      const cplx r = oracle::theta(4, u, tau) / oracle::theta(1, u, tau);
      return kPi * t2 * t2 * r * r;
    };
    const auto series = phi2_laurent(tp);
    const auto closed = phi2_closed_form(tc);
    CHECK(series.valuation() == -2);
    CHECK(rel(series.coefficient(-2), 1.0 / (kPi * t3 * t3)) < 1e-11);
    CHECK(rel(closed.u_minus2, 1.0 / (kPi * t3 * t3)) < 1e-11);
    const cplx u0 = contour_coefficient(f, 0);
    CHECK(rel(series.coefficient(0), u0) < 1e-10);
    CHECK(rel(closed.u_0, u0) < 1e-10);
  }
}
