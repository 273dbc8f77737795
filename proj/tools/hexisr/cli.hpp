#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hexisr::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 2,
  kExitNumeric = 3,
  kExitIo = 4,
};

/// Runs one `hexisr` invocation. `args` excludes the program name. CSV goes
/// to `out` (or to the --out file), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hexisr::cli
