#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qspec {

inline constexpr const char* kToolName = "qspec";
inline constexpr const char* kToolVersion = "0.1.0";

/// Exit codes: 0 expected outcome, 1 unexpected outcome, 2 usage error,
/// 3 graph file not found.
enum ExitCode : int { kExitOk = 0, kExitUnexpected = 1, kExitUsage = 2, kExitNotFound = 3 };

/// Runs the command-line tool on `args` (without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in);

}  // namespace qspec
