#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace jgap::cli {

enum ExitCode : int {
  kPass = 0,
  kUsage = 1,
  kInvariantFailure = 2,
  kConstructionFailure = 3,
  kOutOfRegime = 4,
};

/// Runs one command line (args excludes the program name). Reports go to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace jgap::cli
