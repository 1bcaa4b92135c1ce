#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace euclid::cli {

/// Exit statuses of run().
enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kUsageError = 2,
  kRuntimeError = 3,
};

/// Runs one command line; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace euclid::cli
