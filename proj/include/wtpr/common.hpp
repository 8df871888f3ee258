#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace wtpr {

using cplx = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr cplx kI{0.0, 1.0};

/// Distance to the nearest integer below which a value counts as integral.
/// Shared by every pole and admissibility test in the library.
inline constexpr double kIntegralityGuard = 1e-9;

/// Argument outside the supported evaluation domain.
class range_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Evaluation at (or numerically indistinguishable from) a pole.
class pole_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An iterative method did not reach its tolerance within its budget.
class convergence_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Matrix too ill-conditioned to invert reliably.
class conditioning_error : public std::runtime_error {
 public:
  conditioning_error(const std::string& what, double condition)
      : std::runtime_error(what), condition_(condition) {}
  double condition() const noexcept { return condition_; }

 private:
  double condition_;
};

/// Parameter triple fails one or more non-integrality hypotheses.
class admissibility_error : public std::domain_error {
 public:
  explicit admissibility_error(std::vector<std::string> violations)
      : std::domain_error(join(violations)), violations_(std::move(violations)) {}
  const std::vector<std::string>& violations() const noexcept { return violations_; }

 private:
  static std::string join(const std::vector<std::string>& v) {
    std::string out = "inadmissible parameters:";
    for (const auto& s : v) out += " [" + s + "]";
    return out;
  }
  std::vector<std::string> violations_;
};

/// Eigenvalue label of the involution u -> -u, also used for the sign of
/// the period matrices P+ / P-.
enum class Sign { minus = -1, plus = 1 };

inline double sign_value(Sign s) noexcept { return s == Sign::plus ? 1.0 : -1.0; }
inline Sign opposite(Sign s) noexcept { return s == Sign::plus ? Sign::minus : Sign::plus; }

inline bool near_integer(double x, double guard = kIntegralityGuard) {
  return std::abs(x - std::round(x)) <= guard;
}

/// e(x) = exp(2 pi i x). The argument is reduced mod 1 first so that the
/// result has unit modulus up to rounding for any finite x.
inline cplx unit_phase(double x) {
  const double frac = x - std::round(x);
  return std::polar(1.0, 2.0 * kPi * frac);
}

/// e(z) for complex z.
inline cplx unit_phase(cplx z) {
  return std::exp(2.0 * kPi * kI * z);
}

}  // namespace wtpr
