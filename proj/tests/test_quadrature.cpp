#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracle.hpp"
#include "wtpr/quadrature.hpp"

using namespace wtpr;

TEST_CASE("smooth integrands") {
  const auto sine = tanh_sinh([](double x, double, double) { return std::sin(x); }, 0.0, kPi);
  CHECK(std::abs(sine.value - 2.0) < 1e-14);
  CHECK(sine.last_difference < 1e-11 * 2.0);
  CHECK(sine.levels_used >= 4);
  CHECK(sine.evaluations > 0);

  const auto gauss = tanh_sinh([](double x, double, double) { return std::exp(-x * x); }, -1.0, 2.0);
  CHECK(std::abs(gauss.value - 0.5 * std::sqrt(kPi) * (std::erf(2.0) + std::erf(1.0))) < 1e-14);
}

TEST_CASE("algebraic endpoint singularities") {
  const auto inv_sqrt = tanh_sinh([](double, double l, double) { return 1.0 / std::sqrt(l); }, 0.0, 1.0);
  CHECK(std::abs(inv_sqrt.value - 2.0) < 1e-12);

  oracle::Draw d(131);
  for (int k = 0; k < 20; ++k) {
    const double a = d.uniform(0.1, 2.0), b = d.uniform(0.1, 2.0);
    const auto r = tanh_sinh(
        [&](double, double l, double rgt) { return std::pow(l, a - 1.0) * std::pow(rgt, b - 1.0); }, 0.0, 1.0);
    const double beta = std::tgamma(a) * std::tgamma(b) / std::tgamma(a + b);
    CHECK(std::abs(r.value - beta) < 1e-10 * beta);
  }

  const auto log_int = tanh_sinh([](double, double l, double) { return std::log(l); }, 0.0, 1.0);
  CHECK(std::abs(log_int.value + 1.0) < 1e-13);
}

TEST_CASE("endpoint distances are exact") {
  tanh_sinh(
      [](double x, double l, double r) {
        CHECK(l > 0.0);
        CHECK(r > 0.0);
        CHECK(std::abs((x - 2.0) - l) <= 1e-15 * 4.0);
        CHECK(std::abs((5.0 - x) - r) <= 1e-15 * 4.0);
        return 1.0;
      },
      2.0, 5.0, QuadratureConfig{6, 1e-15});
}

TEST_CASE("non-integrable singularity fails to converge") {
  CHECK_THROWS_AS(tanh_sinh([](double, double l, double) { return 1.0 / l; }, 0.0, 1.0), convergence_error);
}

TEST_CASE("configuration validation") {
  QuadratureConfig cfg;
  CHECK_NOTHROW(cfg.validate());
  cfg.levels = 5;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  CHECK_THROWS_AS(tanh_sinh([](double, double, double) { return 1.0; }, 0.0, 1.0, cfg), std::invalid_argument);
  CHECK_THROWS_AS(tanh_sinh([](double, double, double) { return 1.0; }, 1.0, 0.0), std::invalid_argument);
}

TEST_CASE("deterministic summation order") {
  auto f = [](double x, double, double) { return std::cos(3.0 * x) * std::exp(x); };
  const auto a = tanh_sinh(f, 0.0, 1.0);
  const auto b = tanh_sinh(f, 0.0, 1.0);
  CHECK(a.value == b.value);
  CHECK(a.evaluations == b.evaluations);
}
