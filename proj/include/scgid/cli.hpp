#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace scgid::cli {

enum ExitCode : int {
    Success = 0,
    Negative = 1,
    UsageError = 2,
    Internal = 3,
};

/// Environment variable holding the default worker count.
inline constexpr const char* kWorkersEnv = "SCGID_WORKERS";

/// Runs the command line `args` (without the program name). Human-readable
/// output goes to `out`; with --json the JSON document goes to `out` and the
/// human report to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace scgid::cli
