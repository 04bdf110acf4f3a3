#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace ectx::cli {

enum ExitCode : int {
  kOk = 0,
  kInputError = 2,
  kInvariantViolation = 3,
  kNotConverged = 4,
};

// Runs the ectx command line. args[0] is the program name.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace ectx::cli
