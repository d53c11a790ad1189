#pragma once

#include <iosfwd>

namespace rpla {

/// Entry point behind the `rpla` binary. Returns the process exit code:
/// 0 success, 1 failed verification, 2 usage or input errors.
int run_cli(int argc, const char* const* argv);

/// Stream-injectable variant for in-process tests.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace rpla
