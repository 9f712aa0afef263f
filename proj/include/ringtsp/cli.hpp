#pragma once

#include <iosfwd>

namespace ringtsp::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_usage = 1;
inline constexpr int exit_failure = 2;

/// Entry point of the `ringtsp` tool. Writes results to out (or --out) and
/// diagnostics to err; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ringtsp::cli
