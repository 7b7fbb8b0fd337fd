#pragma once

#include <iosfwd>

namespace patmine::cli {

/// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;   // bad input, config error, or an invalid pattern
inline constexpr int kExitInternal = 2;  // invariant violation (check: I/O error)

/// Entry point for `patmine <command> ...`; all output goes to the given streams.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace patmine::cli
