#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace quatode::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitNumericalError = 3;

/// Entry point of the command-line tool, minus the process plumbing.
/// `args` excludes the program name. Results go to `out` unless --output
/// names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace quatode::cli
