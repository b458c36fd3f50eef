#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace psdthrottle::cli {

enum ExitCode : int {
  kOk = 0,
  kViolation = 1,
  kUsage = 2,
  kSize = 3,
};

/// Runs one invocation. `args` excludes the program name; `in` supplies
/// graph6 lines when no other input is given.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace psdthrottle::cli
