#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace goeritz::cli {

  enum exit_code : int {
    ok                 = 0,
    parse_failure      = 1,
    precondition_fails = 2,
    invariant_breach   = 3
  };

  // Runs the command line `args` (without the program name), writing results
  // to `out` and diagnostics to `err`. Returns the process exit code.
  int run(std::vector<std::string> const& args,
          std::ostream&                   out,
          std::ostream&                   err);

}  // namespace goeritz::cli
