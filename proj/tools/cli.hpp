#pragma once

#include <iosfwd>
#include <string>

namespace clausen::cli {

/// Exit codes of the command-line front end.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;

/// 17 significant digits, '.' separator regardless of locale, "nan" for any NaN.
std::string format_value(double v);

/// Runs `eval` or `table` and writes results to out, diagnostics to err.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace clausen::cli
