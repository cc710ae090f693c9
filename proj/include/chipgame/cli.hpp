#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace chipgame::cli {

enum ExitStatus : int {
  kOk = 0,
  kDomainError = 1,       // malformed arguments, invalid parameters, hypothesis violations
  kCounterexample = 2,    // a scan found a disagreement
  kResourceError = 3,     // state budget exceeded, output not writable
};

/// Parses `args` (without the program name) and runs the subcommand.
/// Results go to `out` (or the --output file); diagnostics go to `err` as a
/// single line "error: <reason_code>: <sentence>".
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace chipgame::cli
