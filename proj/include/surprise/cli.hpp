#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace surprise::cli {

enum ExitCode : int {
  kSuccess = 0,
  kCheckFailed = 1,
  kUsageError = 2,
  kInputError = 3,
};

/// Runs one command line. `args` excludes the program name. Results go to
/// `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace surprise::cli
