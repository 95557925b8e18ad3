#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hym::cli {

/// Exit codes of the hym tool.
enum ExitCode : int {
  kOk = 0,
  kDomainError = 1,  // singular input, shape mismatch, failed law, ...
  kInputError = 2,   // unreadable file, bad JSON, bad flags
};

/// Runs the command line `args` (args[0] is the program name). Results go to
/// `out` as one JSON document; errors go to `err` as one JSON line.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hym::cli
