#include "wtpr/report.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>

namespace wtpr {

namespace {

using json = nlohmann::ordered_json;

const char* const kParamKeys[] = {"alpha", "beta", "gamma", "tau_re", "tau_im"};

json optional_number(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

std::optional<double> read_optional(const json& j, const char* key) {
  const auto& v = j.at(key);
  if (v.is_null()) return std::nullopt;
  return v.get<double>();
}

}  // namespace

json to_json(const CheckResult& r) {
  json params = json::object();
  params["alpha"] = optional_number(r.params.alpha);
  params["beta"] = optional_number(r.params.beta);
  params["gamma"] = optional_number(r.params.gamma);
  params["tau_re"] = optional_number(r.params.tau_re);
  params["tau_im"] = optional_number(r.params.tau_im);
  for (const auto& [k, v] : r.params.extra) params[k] = v;

  json j = json::object();
  j["name"] = r.name;
  j["params"] = std::move(params);
  j["residual"] = r.errored() ? json(nullptr) : json(r.residual);
  j["tolerance"] = r.tolerance;
  j["pass"] = r.pass;
  j["elapsed_ms"] = r.elapsed_ms;
  if (r.error) j["error"] = *r.error;
  return j;
}

json to_json(const VerificationReport& report) {
  json j = json::object();
  j["tool_version"] = report.tool_version;
  j["seed"] = report.seed;
  json checks = json::array();
  for (const auto& c : report.checks) checks.push_back(to_json(c));
  j["checks"] = std::move(checks);
  const auto s = report.summary();
  j["summary"] = {{"pass", s.pass}, {"fail", s.fail}, {"errored", s.errored}};
  return j;
}

VerificationReport report_from_json(const json& j) {
  VerificationReport report;
  report.tool_version = j.at("tool_version").get<std::string>();
  report.seed = j.at("seed").get<std::uint64_t>();
  for (const auto& c : j.at("checks")) {
    CheckResult r;
    r.name = c.at("name").get<std::string>();
    const auto& p = c.at("params");
    r.params.alpha = read_optional(p, "alpha");
    r.params.beta = read_optional(p, "beta");
    r.params.gamma = read_optional(p, "gamma");
    r.params.tau_re = read_optional(p, "tau_re");
    r.params.tau_im = read_optional(p, "tau_im");
    for (const auto& [key, value] : p.items()) {
      if (std::find(std::begin(kParamKeys), std::end(kParamKeys), key) == std::end(kParamKeys)) {
        r.params.extra.emplace_back(key, value.get<double>());
      }
    }
    const auto& res = c.at("residual");
    r.residual = res.is_null() ? std::numeric_limits<double>::quiet_NaN() : res.get<double>();
    r.tolerance = c.at("tolerance").get<double>();
    r.pass = c.at("pass").get<bool>();
    r.elapsed_ms = c.at("elapsed_ms").get<double>();
    if (c.contains("error")) r.error = c.at("error").get<std::string>();
    report.checks.push_back(std::move(r));
  }
  const auto s = report.summary();
  const auto& stored = j.at("summary");
  if (stored.at("pass").get<int>() != s.pass || stored.at("fail").get<int>() != s.fail ||
      stored.at("errored").get<int>() != s.errored) {
    throw std::invalid_argument("report summary does not match its checks");
  }
  return report;
}

std::string dump_report(const VerificationReport& report, int indent) { return to_json(report).dump(indent); }

VerificationReport parse_report(const std::string& text) { return report_from_json(json::parse(text)); }

std::string format_line(const CheckResult& r) {
  char buf[160];
  const char* status = r.errored() ? "ERROR" : (r.pass ? "PASS " : "FAIL ");
  std::snprintf(buf, sizeof buf, "%s %-34s residual=%-11.3e tol=%.0e", status, r.name.c_str(), r.residual,
                r.tolerance);
  std::string line = buf;
  auto put = [&](const char* key, const std::optional<double>& v) {
    if (!v) return;
    std::snprintf(buf, sizeof buf, " %s=%.6g", key, *v);
    line += buf;
  };
  put("alpha", r.params.alpha);
  put("beta", r.params.beta);
  put("gamma", r.params.gamma);
  put("tau_re", r.params.tau_re);
  put("tau_im", r.params.tau_im);
  for (const auto& [k, v] : r.params.extra) put(k.c_str(), v);
  if (r.error) line += "  (" + *r.error + ")";
  return line;
}

}  // namespace wtpr
