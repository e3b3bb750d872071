#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace graphdiam::cli {

enum ExitCode : int {
  kOk = 0,
  kVerifyFailed = 1,
  kUsage = 2,
  kParse = 3,  // malformed input, or metadata that does not fit the graph
  kPrecondition = 4,
  kSizeGuard = 5,
};

/// Runs one command; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace graphdiam::cli
