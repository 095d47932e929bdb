#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace rbhopf::cli {

enum ExitCode : int {
  kSuccess = 0,
  kLawFailure = 1,
  kUsageError = 2,
};

/// Runs one `rbhopf` command. `args` excludes the program name. Results go
/// to `out`, diagnostics to `err`.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rbhopf::cli
