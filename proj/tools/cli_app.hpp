#pragma once

#include <iosfwd>

namespace bernstein::cli {

/// Exit codes: 0 success, 1 input error, 2 numeric-contract violation.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 1;
inline constexpr int kExitNumeric = 2;

/// Parses argv and dispatches to the matching subcommand. `serve` blocks.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace bernstein::cli
