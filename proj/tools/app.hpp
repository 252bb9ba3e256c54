#pragma once

#include <iosfwd>

namespace movmed::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_usage = 2;
inline constexpr int exit_internal = 3;

// Full command line: parse, run, render.  Reports go to out, diagnostics to err.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace movmed::cli
