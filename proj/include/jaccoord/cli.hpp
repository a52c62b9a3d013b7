#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace jaccoord::cli {

enum ExitCode : int {
  kOk = 0,
  kError = 1,
  kNotCoordinate = 2,
  kTheoremViolationSuspected = 3,
};

/// Runs one command line (args[0] is the program name). Writes exactly one
/// JSON document to `out`, or an error document to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Reads `input` as a file if it names a regular file, otherwise returns it.
std::string resolve_input(const std::string& input);

}  // namespace jaccoord::cli
