#pragma once

#include <iosfwd>

namespace edgeideal {

enum ExitCode : int {
  kExitOk = 0,
  kExitVerificationFailure = 1,
  kExitUsage = 2,  // also parse, input and domain errors
  kExitResource = 3,
};

/// The `edgeideal` command line. Cutoffs come from the environment (Limits::from_env).
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace edgeideal
