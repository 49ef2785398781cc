#pragma once

#include <ostream>

namespace gbu {

/// Exit codes shared by every command.
enum ExitCode : int {
  kExitOk = 0,
  kExitInputError = 2,
  kExitInternalError = 3,
  kExitFails = 10,
};

/// Entry point of the `gbu` tool: `model`, `map`, `decide` and `verify`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gbu
