#pragma once

#include <ostream>

namespace holo {

/// Exit codes of the command-line front end.
enum ExitCode : int {
  exit_ok = 0,
  exit_parse = 2,
  exit_invariant = 3,
  exit_bad_reference = 4,
  exit_internal = 5,
};

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace holo
