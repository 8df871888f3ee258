#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wtpr/intersection.hpp"
#include "wtpr/quadrature.hpp"
#include "wtpr/series_kernels.hpp"

namespace wtpr {

inline constexpr const char* kToolVersion = "1.0.0";

/// Parameters echoed into a check result. Fields that do not apply stay empty
/// and serialize as null; `extra` holds check-specific values such as z or n_max.
struct CheckParams {
  std::optional<double> alpha, beta, gamma;
  std::optional<double> tau_re, tau_im;
  std::vector<std::pair<std::string, double>> extra;

  static CheckParams of(const HgParams& p, const TauPoint& tau);
  static CheckParams of(const TauPoint& tau);
};

struct CheckResult {
  std::string name;
  CheckParams params;
  double residual = 0.0;  // NaN when errored
  double tolerance = 0.0;
  bool pass = false;
  double elapsed_ms = 0.0;
  std::optional<std::string> error;

  bool errored() const noexcept { return error.has_value(); }
};

struct ReportSummary {
  int pass = 0;
  int fail = 0;     // evaluated but above tolerance
  int errored = 0;  // could not be evaluated
};

struct VerificationReport {
  std::string tool_version = kToolVersion;
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;

  ReportSummary summary() const;
  bool all_passed() const;
};

/// Static table of every check name the verifier can emit.
struct CheckInfo {
  std::string_view name;
  std::string_view description;
  double default_tolerance;
};

const std::vector<CheckInfo>& check_registry();
/// Throws std::out_of_range for unregistered names.
const CheckInfo& check_info(std::string_view name);

/// Tolerance profile: "default", "loose" (100x default), or a single real
/// that overrides every check.
class TolerancePolicy {
 public:
  TolerancePolicy() = default;
  /// Parses a profile name or a positive real; throws std::invalid_argument.
  static TolerancePolicy parse(const std::string& text);

  double tolerance(std::string_view check_name) const;
  const std::string& label() const noexcept { return label_; }

 private:
  std::string label_ = "default";
  double scale_ = 1.0;
  std::optional<double> override_;
};

/// |x - y| / max(1, |y|).
double relative_residual(cplx x, cplx y);

CheckResult verify_full_tpr(const HgParams& p, const TauPoint& tau, const TolerancePolicy& tol = {});

/// Block relations for eps = -1 and eps = +1, in that order.
std::pair<CheckResult, CheckResult> verify_block_tpr(const HgParams& p, const TauPoint& tau,
                                                     const TolerancePolicy& tol = {});

/// Basis-change consistency: cross-eigenspace orthogonality of the changed
/// homology pairing, agreement with the diagonal H'(+-1), and agreement of the
/// block-diagonal relation with the basis-changed full relation.
std::vector<CheckResult> verify_block_structure(const HgParams& p, const TauPoint& tau,
                                                const TolerancePolicy& tol = {});

/// Residuals |LHS - target|, |RHS - target|, |LHS - RHS| and the G2 route
/// |LHS - LHS_G2|, with target = (a-b+1) lambda + c.
std::vector<CheckResult> verify_entry22(double a, double b, double c, const TauPoint& tau,
                                        const TolerancePolicy& tol = {});

/// Cancellation of the two lambda^n coefficients for n in [2, n_max], with
/// both the Cauchy-product 4F3 forms and their Whipple transforms, plus the
/// n = 0 and n = 1 values c and a-b+1.
std::vector<CheckResult> verify_whipple(double a, double b, double c, int n_max = 12,
                                        const TolerancePolicy& tol = {});

/// The q-series, G2 and Laurent-coefficient identity suite at one tau.
std::vector<CheckResult> verify_series_identities(const TauPoint& tau, const TolerancePolicy& tol = {});

/// Wirtinger integral chained to B(alpha, gamma-alpha) 2F1(alpha, beta, gamma; lambda).
CheckResult verify_quadrature(const HgParams& p, const TauPoint& tau, const TolerancePolicy& tol = {},
                              const QuadratureConfig& cfg = {});

/// p1+ by quadrature against its closed form, and the pairing combination
/// against both the intersection number and the 2F1-product form.
std::vector<CheckResult> verify_euler_pairing(double a, double b, double c, double z,
                                              const TolerancePolicy& tol = {},
                                              const QuadratureConfig& cfg = {});

/// The four tau values used by sweeps.
const std::vector<TauPoint>& sweep_taus();

/// Seeded sweep: `count` admissible triples drawn uniformly from (-2, 2)^3,
/// each checked at every sweep tau, plus the identity suite once per tau.
/// Quadrature and Euler checks run for draws whose endpoint exponents all
/// exceed -1 by at least 0.1. Deterministic given the seed.
VerificationReport run_sweep(std::uint64_t seed, int count, const TolerancePolicy& tol = {});

/// Admissibility of the entry-(2,2) triple through alpha = a + 1/2, beta = b - 1/2, gamma = c.
Admissibility entry22_admissible(double a, double b, double c);

}  // namespace wtpr
