#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace rrmul::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int { kOk = 0, kInfeasible = 2, kCheckFailed = 3, kInputError = 4 };

/// Runs one invocation; args[0] is the program name. Reports go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rrmul::cli
