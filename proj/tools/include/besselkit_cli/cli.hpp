#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace besselkit::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitValidation = 2;

/// Runs one command line (args excludes the program name). Data goes to
/// `out` unless --output names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// printf("%.14e"): 15 significant digits, lowercase exponent.
std::string format_number(double v);

}  // namespace besselkit::cli
