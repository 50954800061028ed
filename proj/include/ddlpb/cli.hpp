#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ddlpb::cli {

inline constexpr const char* kReportFormat = "ddlpb-report/1";

/// Exit codes: 0 converged, 2 not converged, 1 on any error.
inline constexpr int kExitConverged = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitNotConverged = 2;

/// Runs the command line `args` (without the program name). Reports go to
/// `out` unless --out is given; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Parses "start:step:stop" (inclusive) or a comma-separated list.
std::vector<double> parse_alpha_grid(const std::string& text);

}  // namespace ddlpb::cli
