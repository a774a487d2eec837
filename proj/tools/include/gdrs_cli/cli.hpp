#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gdrs::cli {

enum ExitCode : int { kOk = 0, kCheckFailure = 1, kUsageError = 2, kBudgetExceeded = 3 };

/// Runs one CLI invocation. `args` excludes the program name. Reports go to
/// `out` (or the --out file), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gdrs::cli
