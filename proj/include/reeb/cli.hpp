#pragma once

#include <iosfwd>

namespace reeb {

/// Exit statuses of the command-line tool.
enum ExitStatus : int {
  kExitOk = 0,
  kExitInvalid = 1,    // validation failure or InvalidGraph
  kExitAlgorithm = 2,  // the assignment or generator gave up
  kExitInput = 3,      // I/O, parsing, bad arguments, unusable mesh
};

/// Runs the tool. "-" as an input path reads `in`; results go to `out`
/// unless --output names a file; failures print {"error", "message"} on `err`.
int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace reeb
