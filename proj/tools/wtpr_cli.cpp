// wtpr: evaluate theta / hypergeometric kernels and verify twisted period relations.
//
// Exit status: 0 when every check passes, 1 when a check fails or cannot be
// evaluated, 2 on usage errors and inadmissible parameters.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>

#include "wtpr/hypergeometric.hpp"
#include "wtpr/report.hpp"
#include "wtpr/series_identities.hpp"
#include "wtpr/verifier.hpp"

namespace {

using namespace wtpr;

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Options {
  double alpha = 0.30, beta = 0.21, gamma = 0.77;
  double a = 0.2, b = 0.3, c = 0.6;
  double tau_re = 0.0, tau_im = 1.0;
  double u_re = 0.0, u_im = 0.0;
  double z_re = 0.5, z_im = 0.0;
  std::string tol = "default";
  std::uint64_t seed = 42;
  int count = 100;
  std::string json;
  bool quiet = false;
};

class usage_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void print_complex(const char* label, cplx v) { std::printf("%-12s %.17g %+.17gi\n", label, v.real(), v.imag()); }

int emit(const Options& o, VerificationReport report) {
  report.seed = o.seed;
  if (!o.quiet) {
    for (const auto& c : report.checks) std::puts(format_line(c).c_str());
    const auto s = report.summary();
    std::printf("summary: %d pass, %d fail, %d errored\n", s.pass, s.fail, s.errored);
  }
  if (!o.json.empty()) {
    const std::string text = dump_report(report);
    if (o.json == "stdout" || o.json == "-") {
      std::puts(text.c_str());
    } else {
      std::ofstream out(o.json);
      if (!out) throw usage_error("cannot write " + o.json);
      out << text << '\n';
    }
  }
  return report.all_passed() ? 0 : kExitFail;
}

void require(const Admissibility& adm) {
  if (!adm) throw admissibility_error(adm.violations);
}

int run(CLI::App& app, const Options& o) {
  const TauPoint tau(cplx{o.tau_re, o.tau_im});
  const auto tol = TolerancePolicy::parse(o.tol);
  const HgParams p{o.alpha, o.beta, o.gamma};

  if (app.got_subcommand("theta")) {
    const cplx u{o.u_re, o.u_im};
    for (int j = 1; j <= 4; ++j) print_complex(("theta_" + std::to_string(j)).c_str(), theta(j, u, tau));
    return 0;
  }
  if (app.got_subcommand("lambda")) {
    const auto tc = theta_constants(tau);
    print_complex("lambda", lambda_tau(tc));
    print_complex("theta_2(0)", tc.th2_0);
    print_complex("theta_3(0)", tc.th3_0);
    print_complex("theta_4(0)", tc.th4_0);
    print_complex("G2", eisenstein_g2(tau));
    return 0;
  }
  if (app.got_subcommand("2f1")) {
    print_complex("2F1", gauss_2f1(o.a, o.b, o.c, cplx{o.z_re, o.z_im}));
    return 0;
  }
  if (auto* tpr = app.get_subcommand("tpr"); tpr->parsed()) {
    VerificationReport report;
    if (tpr->got_subcommand("full")) {
      require(admissible(p));
      report.checks.push_back(verify_full_tpr(p, tau, tol));
    } else if (tpr->got_subcommand("blocks")) {
      require(admissible(p));
      auto [minus, plus] = verify_block_tpr(p, tau, tol);
      report.checks.push_back(std::move(minus));
      report.checks.push_back(std::move(plus));
      for (auto& r : verify_block_structure(p, tau, tol)) report.checks.push_back(std::move(r));
    } else {
      require(entry22_admissible(o.a, o.b, o.c));
      report.checks = verify_entry22(o.a, o.b, o.c, tau, tol);
    }
    return emit(o, std::move(report));
  }
  if (app.got_subcommand("identities")) {
    VerificationReport report;
    report.checks = verify_series_identities(tau, tol);
    return emit(o, std::move(report));
  }
  if (app.got_subcommand("sweep")) {
    if (o.count < 1) throw usage_error("--count must be at least 1");
    return emit(o, run_sweep(o.seed, o.count, tol));
  }
  throw usage_error("no subcommand given");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Theta-function kernels and twisted period relation checks"};
  app.require_subcommand(1);
  Options o;

  app.add_option("--tau-re", o.tau_re, "real part of tau");
  app.add_option("--tau-im", o.tau_im, "imaginary part of tau (>= 0.1)");
  app.add_option("--tol", o.tol, "tolerance profile (default, loose) or a positive real");
  app.add_option("--json", o.json, "write the JSON report to a path, or 'stdout'");
  app.add_flag("--quiet", o.quiet, "suppress the per-check text lines");

  auto* theta_cmd = app.add_subcommand("theta", "theta_1..theta_4 at (u, tau)");
  theta_cmd->add_option("--u-re", o.u_re, "real part of u");
  theta_cmd->add_option("--u-im", o.u_im, "imaginary part of u");
  app.add_subcommand("lambda", "modular lambda, theta constants and G2 at tau");
  auto* f21 = app.add_subcommand("2f1", "Gauss hypergeometric series");
  f21->add_option("--a", o.a);
  f21->add_option("--b", o.b);
  f21->add_option("--c", o.c);
  f21->add_option("--z-re", o.z_re, "real part of z");
  f21->add_option("--z-im", o.z_im, "imaginary part of z");

  auto* tpr = app.add_subcommand("tpr", "twisted period relations");
  tpr->require_subcommand(1);
  for (const char* name : {"full", "blocks"}) {
    auto* sub = tpr->add_subcommand(name, std::string(name) == "full" ? "C = P+ tH^-1 tP-" : "eigen-block relations");
    sub->add_option("--alpha", o.alpha);
    sub->add_option("--beta", o.beta);
    sub->add_option("--gamma", o.gamma);
  }
  auto* e22 = tpr->add_subcommand("entry22", "entry-(2,2) identity in (a, b, c)");
  e22->add_option("--a", o.a);
  e22->add_option("--b", o.b);
  e22->add_option("--c", o.c);

  app.add_subcommand("identities", "q-series / G2 / Laurent identity suite at tau");
  auto* sweep = app.add_subcommand("sweep", "seeded random sweep of every check");
  sweep->add_option("--seed", o.seed, "random seed");
  sweep->add_option("--count", o.count, "number of parameter draws");

  // global options may also follow the subcommand
  for (auto* sub : app.get_subcommands({})) {
    sub->fallthrough();
    for (auto* nested : sub->get_subcommands({})) nested->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    return run(app, o);
  } catch (const usage_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  } catch (const std::domain_error& e) {  // inadmissible parameters, tau or z out of range
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitFail;
  }
}
