#pragma once

#include <string>

#include <json.hpp>

#include "wtpr/verifier.hpp"

namespace wtpr {

/// Report schema:
///   {tool_version, seed,
///    checks: [{name, params: {alpha, beta, gamma, tau_re, tau_im, ...extra}, residual,
///              tolerance, pass, elapsed_ms, error?}],
///    summary: {pass, fail, errored}}
/// Missing parameters and the residual of an errored check are null.
nlohmann::ordered_json to_json(const CheckResult& r);
nlohmann::ordered_json to_json(const VerificationReport& report);

/// Inverse of to_json; the summary is recomputed from the checks and must
/// match the stored one (std::invalid_argument otherwise).
VerificationReport report_from_json(const nlohmann::ordered_json& j);

std::string dump_report(const VerificationReport& report, int indent = 2);
VerificationReport parse_report(const std::string& text);

/// One human-readable line: "PASS name residual=... tol=... [params]".
std::string format_line(const CheckResult& r);

}  // namespace wtpr
