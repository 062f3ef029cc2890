#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dforge::cli {

enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kInvalidInput = 2,
  kInfeasible = 3,
};

/// Runs the dessin-forge command line. `args` excludes the program name.
/// Normal output goes to `out` (or --output), diagnostics to `err`.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace dforge::cli
