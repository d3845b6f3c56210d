#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace npnas::cli {

enum ExitCode : int {
  kOk = 0,
  kUnsat = 1,
  kUsage = 2,
  kGuard = 3,
};

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace npnas::cli
