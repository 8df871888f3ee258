#include "wtpr/verifier.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <limits>
#include <random>

#include "wtpr/hypergeometric.hpp"
#include "wtpr/period_engine.hpp"
#include "wtpr/series_identities.hpp"

namespace wtpr {

// ---------------------------------------------------------------------------
// registry and tolerances

const std::vector<CheckInfo>& check_registry() {
  static const std::vector<CheckInfo> registry = {
      {"full_tpr", "C = P+ tH^-1 tP-, relative Frobenius residual", 1e-8},
      {"block_tpr_minus", "C(-1) = P'+(-1) tH'(-1)^-1 tP'-(-1)", 1e-8},
      {"block_tpr_plus", "C(+1) = P'+(+1) tH'(+1)^-1 tP'-(+1)", 1e-8},
      {"block_orthogonality", "B_eps(p) H tB_{-eps}(-p) = 0, entrywise relative to its term sizes", 1e-12},
      {"block_h_prime", "B_eps(p) H tB_eps(-p) equals the diagonal H'(eps)", 1e-10},
      {"block_period_offdiag", "P+ tB(p) and P- tB(-p) are block diagonal", 1e-10},
      {"block_assembly", "block-diagonal relation equals the basis-changed full relation", 1e-8},
      {"entry22_lhs", "theta-derivative side minus (a-b+1) lambda + c", 1e-9},
      {"entry22_rhs", "2F1-product side minus (a-b+1) lambda + c", 1e-9},
      {"entry22_sides", "theta-derivative side minus 2F1-product side", 1e-9},
      {"entry22_lhs_g2", "theta-derivative side against its G2 rewriting", 1e-10},
      {"whipple_cancellation", "lambda^n coefficients of the two products cancel (Cauchy 4F3 forms)", 1e-10},
      {"whipple_cancellation_transformed", "lambda^n coefficients cancel (Whipple-transformed forms)", 1e-10},
      {"whipple_forms_agree", "Cauchy 4F3 and Whipple-transformed coefficients agree", 1e-10},
      {"whipple_n0", "lambda^0 coefficient equals c", 1e-12},
      {"whipple_n1", "lambda^1 coefficient equals a-b+1", 1e-12},
      {"theta1_diff", "theta_1'''(0)/theta_1'(0): termwise against Lambert sum", 1e-10},
      {"theta2_diff", "theta_2''(0)/theta_2(0): q-series routes against G2 form", 1e-10},
      {"theta3_diff", "theta_3''(0)/theta_3(0): q-series routes against G2 form", 1e-10},
      {"theta4_diff", "theta_4''(0)/theta_4(0): q-series routes against G2 form", 1e-10},
      {"lambda_theta3_cs", "q-sum for cs equals (1 - lambda/2) theta_3(0)^4", 1e-10},
      {"lambda_theta3_ds", "q-sum for ds equals (1 - 2 lambda) theta_3(0)^4", 1e-10},
      {"lambda_theta3_ns", "q-sum for ns equals (1 + lambda) theta_3(0)^4", 1e-10},
      {"g2_combination_cs", "2G2(2t) - G2(t) = pi^2/3 (1 - lambda/2) theta_3(0)^4", 1e-10},
      {"g2_combination_ds", "4G2(2t) + G2(t/2) - 4G2(t) = pi^2/3 (1 - 2 lambda) theta_3(0)^4", 1e-10},
      {"g2_combination_ns", "2G2(t) - G2(t/2) = pi^2/3 (1 + lambda) theta_3(0)^4", 1e-10},
      {"laurent_u1_cs", "u^1 coefficient of cs: q-series, lambda and Taylor routes", 1e-10},
      {"laurent_u1_ds", "u^1 coefficient of ds: q-series, lambda and Taylor routes", 1e-10},
      {"laurent_u1_ns", "u^1 coefficient of ns: q-series, lambda and Taylor routes", 1e-10},
      {"lhs_by_g2", "entry-(2,2) left side: theta-derivative against G2 form", 1e-10},
      {"phi2_u_minus2", "u^-2 coefficient of phi_2/du equals 1/(pi theta_3(0)^2)", 1e-11},
      {"phi2_u0", "u^0 coefficient of phi_2/du against its closed form", 1e-10},
      {"wirtinger_quadrature", "Wirtinger integral times prefactor equals B(a, g-a) 2F1", 1e-8},
      {"euler_p1_closed", "p1+ by quadrature equals B(a, c-a) 2F1(a, b, c; z)", 1e-9},
      {"euler_p2_closed", "p2+ and p2- by quadrature equal their Beta-2F1 closed forms", 1e-9},
      {"euler_intersection", "pairing combination equals 2 pi i ((a-b+1) z + c)/(a(a+1))", 1e-8},
      {"euler_product", "pairing combination equals the 2F1-product expression", 1e-8},
  };
  return registry;
}

const CheckInfo& check_info(std::string_view name) {
  for (const auto& info : check_registry())
    if (info.name == name) return info;
  throw std::out_of_range("unregistered check: " + std::string(name));
}

TolerancePolicy TolerancePolicy::parse(const std::string& text) {
  TolerancePolicy t;
  t.label_ = text;
  if (text == "default") return t;
  if (text == "loose") {
    t.scale_ = 100.0;
    return t;
  }
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || !(v > 0.0) || !std::isfinite(v)) {
    throw std::invalid_argument("tolerance must be 'default', 'loose' or a positive real, got '" + text + "'");
  }
  t.override_ = v;
  return t;
}

double TolerancePolicy::tolerance(std::string_view check_name) const {
  const double base = check_info(check_name).default_tolerance;
  return override_ ? *override_ : base * scale_;
}

double relative_residual(cplx x, cplx y) { return std::abs(x - y) / std::max(1.0, std::abs(y)); }

CheckParams CheckParams::of(const TauPoint& tau) {
  CheckParams c;
  c.tau_re = tau.tau().real();
  c.tau_im = tau.tau().imag();
  return c;
}

CheckParams CheckParams::of(const HgParams& p, const TauPoint& tau) {
  CheckParams c = of(tau);
  c.alpha = p.alpha;
  c.beta = p.beta;
  c.gamma = p.gamma;
  return c;
}

ReportSummary VerificationReport::summary() const {
  ReportSummary s;
  for (const auto& c : checks) {
    if (c.errored())
      ++s.errored;
    else if (c.pass)
      ++s.pass;
    else
      ++s.fail;
  }
  return s;
}

bool VerificationReport::all_passed() const {
  const auto s = summary();
  return s.fail == 0 && s.errored == 0;
}

// ---------------------------------------------------------------------------
// evaluation harness

namespace {

using Clock = std::chrono::steady_clock;

struct Named {
  std::string name;
  double residual;
};

CheckResult make_result(std::string name, const CheckParams& params, double residual, const TolerancePolicy& tol,
                        double ms) {
  CheckResult r;
  r.tolerance = tol.tolerance(name);
  r.name = std::move(name);
  r.params = params;
  if (!std::isfinite(residual)) {
    r.residual = std::numeric_limits<double>::quiet_NaN();
    r.error = "non-finite residual";
  } else {
    r.residual = residual;
    r.pass = residual <= r.tolerance;
  }
  r.elapsed_ms = ms;
  return r;
}

/// Runs `compute`, which yields named residuals; on any exception every name
/// in `names` becomes an errored result carrying the message.
std::vector<CheckResult> evaluate(const std::vector<std::string>& names, const CheckParams& params,
                                  const TolerancePolicy& tol, const std::function<std::vector<Named>()>& compute) {
  const auto start = Clock::now();
  std::vector<CheckResult> out;
  try {
    const auto values = compute();
    const double ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    for (const auto& v : values) out.push_back(make_result(v.name, params, v.residual, tol, ms));
  } catch (const std::exception& e) {
    const double ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    for (const auto& n : names) {
      CheckResult r;
      r.name = n;
      r.params = params;
      r.residual = std::numeric_limits<double>::quiet_NaN();
      r.tolerance = tol.tolerance(n);
      r.elapsed_ms = ms;
      r.error = e.what();
      out.push_back(std::move(r));
    }
  }
  return out;
}

double matrix_residual(const ComplexMatrix& expected, const ComplexMatrix& actual) {
  return (expected - actual).frobenius_norm() / std::max(1.0, expected.frobenius_norm());
}

// Largest |(L M tR)_ij| / max(1, sum_kl |L_ik| |M_kl| |R_jl|): each entry of the
// product measured against the size of the terms that cancel in it.
double scaled_product_max(const ComplexMatrix& l, const ComplexMatrix& m, const ComplexMatrix& r) {
  const auto prod = l * m * r.transpose();
  double worst = 0.0;
  for (int i = 0; i < prod.rows(); ++i)
    for (int j = 0; j < prod.cols(); ++j) {
      double scale = 0.0;
      for (int k = 0; k < m.rows(); ++k)
        for (int c = 0; c < m.cols(); ++c) scale += std::abs(l(i, k)) * std::abs(m(k, c)) * std::abs(r(j, c));
      worst = std::max(worst, std::abs(prod(i, j)) / std::max(1.0, scale));
    }
  return worst;
}

ComplexMatrix tpr_product(const ComplexMatrix& pp, const ComplexMatrix& h, const ComplexMatrix& pm) {
  return pp * h.transpose().inverse() * pm.transpose();
}

}  // namespace

// ---------------------------------------------------------------------------
// checks

CheckResult verify_full_tpr(const HgParams& p, const TauPoint& tau, const TolerancePolicy& tol) {
  return evaluate({"full_tpr"}, CheckParams::of(p, tau), tol, [&]() -> std::vector<Named> {
    require_admissible(p);
    const auto tc = theta_constants(tau);
    const auto c = cohomology_C(p, tc);
    const auto r = tpr_product(period_matrix(Sign::plus, p, tc), homology_H(p), period_matrix(Sign::minus, p, tc));
    return {{"full_tpr", matrix_residual(c, r)}};
  }).front();
}

std::pair<CheckResult, CheckResult> verify_block_tpr(const HgParams& p, const TauPoint& tau,
                                                     const TolerancePolicy& tol) {
  auto results = evaluate({"block_tpr_minus", "block_tpr_plus"}, CheckParams::of(p, tau), tol,
                          [&]() -> std::vector<Named> {
                            require_admissible(p);
                            const auto tc = theta_constants(tau);
                            const auto hp = block_H_prime(p);
                            const auto cb = block_C(p, tc);
                            const auto pp = block_periods(Sign::plus, p, tc);
                            const auto pm = block_periods(Sign::minus, p, tc);
                            std::vector<Named> out;
                            for (Sign eps : {Sign::minus, Sign::plus}) {
                              const auto r = tpr_product(pp[eps], hp[eps], pm[eps]);
                              out.push_back({eps == Sign::minus ? "block_tpr_minus" : "block_tpr_plus",
                                             matrix_residual(cb[eps], r)});
                            }
                            return out;
                          });
  return {results[0], results[1]};
}

std::vector<CheckResult> verify_block_structure(const HgParams& p, const TauPoint& tau, const TolerancePolicy& tol) {
  return evaluate(
      {"block_orthogonality", "block_h_prime", "block_period_offdiag", "block_assembly"}, CheckParams::of(p, tau),
      tol, [&]() -> std::vector<Named> {
        require_admissible(p);
        const auto tc = theta_constants(tau);
        const auto h = homology_H(p);
        const auto bp = basis_change(p);
        const auto bm = basis_change(p.negated());
        const auto hp = block_H_prime(p);

        double ortho = 0.0, hprime = 0.0;
        for (Sign eps : {Sign::minus, Sign::plus}) {
          ortho = std::max(ortho, scaled_product_max(bp.rows(eps), h, bm.rows(opposite(eps))));
          hprime = std::max(hprime, matrix_residual(hp[eps], bp.rows(eps) * h * bm.rows(eps).transpose()));
        }

        const auto pp = period_matrix(Sign::plus, p, tc);
        const auto pm = period_matrix(Sign::minus, p, tc);
        const auto pp_changed = pp * bp.full().transpose();
        const auto pm_changed = pm * bm.full().transpose();
        double offdiag = 0.0;
        for (const auto* m : {&pp_changed, &pm_changed}) {
          double off = 0.0;
          for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c)
              if ((r < 2) != (c < 2)) off = std::max(off, std::abs((*m)(r, c)));
          offdiag = std::max(offdiag, off / std::max(1.0, m->max_abs()));
        }

        const auto h_changed = bp.full() * h * bm.full().transpose();
        const auto changed = tpr_product(pp_changed, h_changed, pm_changed);
        const auto bpp = block_periods(Sign::plus, p, tc);
        const auto bpm = block_periods(Sign::minus, p, tc);
        const auto assembled = ComplexMatrix::block_diagonal(tpr_product(bpp.minus, hp.minus, bpm.minus),
                                                             tpr_product(bpp.plus, hp.plus, bpm.plus));
        return {{"block_orthogonality", ortho},
                {"block_h_prime", hprime},
                {"block_period_offdiag", offdiag},
                {"block_assembly", matrix_residual(changed, assembled)}};
      });
}

Admissibility entry22_admissible(double a, double b, double c) { return admissible({a + 0.5, b - 0.5, c}); }

std::vector<CheckResult> verify_entry22(double a, double b, double c, const TauPoint& tau, const TolerancePolicy& tol) {
  CheckParams params = CheckParams::of({a + 0.5, b - 0.5, c}, tau);
  params.extra = {{"a", a}, {"b", b}, {"c", c}};
  return evaluate({"entry22_lhs", "entry22_rhs", "entry22_sides", "entry22_lhs_g2"}, params, tol,
                  [&]() -> std::vector<Named> {
                    auto adm = entry22_admissible(a, b, c);
                    if (!adm) throw admissibility_error(std::move(adm.violations));
                    const auto tc = theta_constants(tau);
                    const cplx lambda = lambda_tau(tc);
                    if (std::abs(lambda) > 0.95) throw range_error("entry22: |lambda(tau)| exceeds 0.95");
                    const cplx target = entry22_target(a, b, c, lambda);
                    const cplx lhs = entry22_lhs_theta(a, b, c, tc);
                    const cplx rhs = entry22_rhs(a, b, c, lambda);
                    const cplx lhs_g2 = entry22_lhs_g2(a, b, c, tau);
                    return {{"entry22_lhs", std::abs(lhs - target)},
                            {"entry22_rhs", std::abs(rhs - target)},
                            {"entry22_sides", std::abs(lhs - rhs)},
                            {"entry22_lhs_g2", std::abs(lhs - lhs_g2)}};
                  });
}

std::vector<CheckResult> verify_whipple(double a, double b, double c, int n_max, const TolerancePolicy& tol) {
  CheckParams params;
  params.extra = {{"a", a}, {"b", b}, {"c", c}, {"n_max", static_cast<double>(n_max)}};
  return evaluate({"whipple_cancellation", "whipple_cancellation_transformed", "whipple_forms_agree", "whipple_n0",
                   "whipple_n1"},
                  params, tol, [&]() -> std::vector<Named> {
                    if (n_max < 2) throw std::invalid_argument("verify_whipple: n_max must be at least 2");
                    double cancel = 0.0, cancel_t = 0.0, agree = 0.0, n0 = 0.0, n1 = 0.0;
                    for (auto form : {CoefficientForm::cauchy_4f3, CoefficientForm::whipple}) {
                      n0 = std::max(n0, std::abs(first_product_coefficient(0, a, b, c, form) - c));
                      n1 = std::max(n1, std::abs(first_product_coefficient(1, a, b, c, form) - (a - b + 1.0)));
                    }
                    for (int n = 2; n <= n_max; ++n) {
                      const double f1 = first_product_coefficient(n, a, b, c, CoefficientForm::cauchy_4f3);
                      const double f2 = second_product_coefficient(n, a, b, c, CoefficientForm::cauchy_4f3);
                      const double w1 = first_product_coefficient(n, a, b, c, CoefficientForm::whipple);
                      const double w2 = second_product_coefficient(n, a, b, c, CoefficientForm::whipple);
                      cancel = std::max(cancel, std::abs(f1 + f2) / (1.0 + std::abs(f1)));
                      cancel_t = std::max(cancel_t, std::abs(w1 + w2) / (1.0 + std::abs(w1)));
                      agree = std::max({agree, std::abs(f1 - w1) / (1.0 + std::abs(f1)),
                                        std::abs(f2 - w2) / (1.0 + std::abs(f2))});
                    }
                    return {{"whipple_cancellation", cancel},
                            {"whipple_cancellation_transformed", cancel_t},
                            {"whipple_forms_agree", agree},
                            {"whipple_n0", n0},
                            {"whipple_n1", n1}};
                  });
}

std::vector<CheckResult> verify_series_identities(const TauPoint& tau, const TolerancePolicy& tol) {
  const CheckParams params = CheckParams::of(tau);
  std::vector<CheckResult> out;
  auto add = [&](const std::string& name, const std::function<double()>& f) {
    auto r = evaluate({name}, params, tol, [&]() -> std::vector<Named> { return {{name, f()}}; });
    out.push_back(std::move(r.front()));
  };
  const auto tc = theta_constants(tau);

  add("theta1_diff", [&] { return relative_residual(theta_ratio_termwise(1, tc), theta_ratio_lambert(1, tau)); });
  for (int j = 2; j <= 4; ++j) {
    add("theta" + std::to_string(j) + "_diff", [&, j] {
      const cplx g2 = theta_ratio_g2(j, tau);
      return std::max({relative_residual(theta_ratio_termwise(j, tc), g2),
                       relative_residual(theta_ratio_lambert(j, tau), g2),
                       relative_residual(theta_ratio_divisor(j, tau), g2)});
    });
  }
  const std::pair<EllipticKind, const char*> kinds[] = {
      {EllipticKind::cs, "cs"}, {EllipticKind::ds, "ds"}, {EllipticKind::ns, "ns"}};
  for (const auto& [kind, label] : kinds) {
    const std::string suffix = label;
    add("lambda_theta3_" + suffix,
        [&, kind] { return relative_residual(lambda_qsum(kind, tau), lambda_theta3_form(kind, tc)); });
  }
  for (const auto& [kind, label] : kinds) {
    const std::string suffix = label;
    add("g2_combination_" + suffix, [&, kind] {
      return relative_residual(g2_combination(kind, tau), (kPi * kPi / 3.0) * lambda_theta3_form(kind, tc));
    });
  }
  for (const auto& [kind, label] : kinds) {
    const std::string suffix = label;
    add("laurent_u1_" + suffix, [&, kind] {
      const cplx ref = laurent_u1_lambda(kind, tc);
      return std::max(relative_residual(laurent_u1_qseries(kind, tau), ref),
                      relative_residual(laurent_u1_taylor(kind, tau), ref));
    });
  }
  add("lhs_by_g2", [&] {
    const double a = 0.2, b = 0.3, c = 0.6;
    return relative_residual(entry22_lhs_theta(a, b, c, tc), entry22_lhs_g2(a, b, c, tau));
  });
  const auto series = phi2_laurent(tau);
  const auto closed = phi2_closed_form(tc);
  add("phi2_u_minus2", [&] { return relative_residual(series.coefficient(-2), closed.u_minus2); });
  add("phi2_u0", [&] { return relative_residual(series.coefficient(0), closed.u_0); });
  return out;
}

CheckResult verify_quadrature(const HgParams& p, const TauPoint& tau, const TolerancePolicy& tol,
                              const QuadratureConfig& cfg) {
  return evaluate({"wirtinger_quadrature"}, CheckParams::of(p, tau), tol, [&]() -> std::vector<Named> {
    const auto tc = theta_constants(tau);
    const auto q = wirtinger_quadrature(p, tau, cfg);
    const cplx chained = q.value * wirtinger_prefactor(p, tc);
    const cplx expected = gamma_real(p.alpha) * gamma_real(p.gamma - p.alpha) / gamma_real(p.gamma) *
                          gauss_2f1(p.alpha, p.beta, p.gamma, lambda_tau(tc));
    return {{"wirtinger_quadrature", relative_residual(chained, expected)}};
  }).front();
}

std::vector<CheckResult> verify_euler_pairing(double a, double b, double c, double z, const TolerancePolicy& tol,
                                              const QuadratureConfig& cfg) {
  CheckParams params;
  params.extra = {{"a", a}, {"b", b}, {"c", c}, {"z", z}};
  return evaluate({"euler_p1_closed", "euler_p2_closed", "euler_intersection", "euler_product"}, params, tol,
                  [&]() -> std::vector<Named> {
                    const cplx zc{z, 0.0};
                    const cplx p1p = euler_pairing(EulerSide::p1_plus, a, b, c, zc, cfg).value;
                    const cplx p2p = euler_pairing(EulerSide::p2_plus, a, b, c, zc, cfg).value;
                    const cplx p2m = euler_pairing(EulerSide::p2_minus, a, b, c, zc, cfg).value;
                    // p1- diverges wherever p1+ converges, so it comes from its closed form
                    const cplx p1m = euler_pairing_closed(EulerSide::p1_minus, a, b, c, zc);
                    const cplx comb = euler_combination(a, b, c, p1p, p1m, p2p, p2m);
                    const double p2 = std::max(
                        relative_residual(p2p, euler_pairing_closed(EulerSide::p2_plus, a, b, c, zc)),
                        relative_residual(p2m, euler_pairing_closed(EulerSide::p2_minus, a, b, c, zc)));
                    return {
                        {"euler_p1_closed",
                         relative_residual(p1p, euler_pairing_closed(EulerSide::p1_plus, a, b, c, zc))},
                        {"euler_p2_closed", p2},
                        {"euler_intersection", relative_residual(comb, euler_intersection_number(a, b, c, zc))},
                        {"euler_product", relative_residual(comb, euler_product_form(a, b, c, zc))}};
                  });
}

// ---------------------------------------------------------------------------
// sweep

const std::vector<TauPoint>& sweep_taus() {
  static const std::vector<TauPoint> taus = {TauPoint(cplx{0.0, 1.0}), TauPoint(cplx{0.0, 1.3}),
                                             TauPoint(cplx{0.0, 2.0}), TauPoint(cplx{0.3, 1.2})};
  return taus;
}

namespace {

// Quadrature checks run only when every endpoint exponent exceeds -1 by at
// least this much; closer to -1 the integrand mass sits below double range.
constexpr double kEndpointMargin = 0.1;

bool in_wirtinger_region(const HgParams& p) {
  return p.alpha >= kEndpointMargin && p.gamma - p.alpha >= kEndpointMargin;
}

bool in_euler_region(double a, double b, double c) {
  const double m = kEndpointMargin;
  return a >= m && c - a >= m && b >= m && 1.0 - b >= m && b - c + 1.0 >= m && c - b + 2.0 >= m;
}

void append(std::vector<CheckResult>& dst, std::vector<CheckResult>&& src) {
  for (auto& r : src) dst.push_back(std::move(r));
}

}  // namespace

VerificationReport run_sweep(std::uint64_t seed, int count, const TolerancePolicy& tol) {
  if (count < 1) throw std::invalid_argument("run_sweep: count must be at least 1");
  VerificationReport report;
  report.seed = seed;
  auto& checks = report.checks;

  for (const auto& tau : sweep_taus()) append(checks, verify_series_identities(tau, tol));

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-2.0, 2.0);
  for (int k = 0; k < count; ++k) {
    HgParams p;
    do {
      p.alpha = dist(rng);
      p.beta = dist(rng);
      p.gamma = dist(rng);
    } while (!admissible(p));

    const double a = p.alpha - 0.5, b = p.beta + 0.5, c = p.gamma;
    append(checks, verify_whipple(a, b, c, 12, tol));
    for (const auto& tau : sweep_taus()) {
      checks.push_back(verify_full_tpr(p, tau, tol));
      auto [minus, plus] = verify_block_tpr(p, tau, tol);
      checks.push_back(std::move(minus));
      checks.push_back(std::move(plus));
      append(checks, verify_block_structure(p, tau, tol));
      append(checks, verify_entry22(a, b, c, tau, tol));
      const bool imaginary = tau.tau().real() == 0.0;
      if (imaginary && in_wirtinger_region(p)) checks.push_back(verify_quadrature(p, tau, tol));
      if (imaginary && in_euler_region(a, b, c)) {
        append(checks, verify_euler_pairing(a, b, c, lambda_tau(tau).real(), tol));
      }
    }
  }
  return report;
}

}  // namespace wtpr
