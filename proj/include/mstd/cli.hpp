#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mstd::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalidInput = 2;
inline constexpr int kExitValidationFailure = 3;

/// Runs one command line (args excludes the program name). Results go to
/// `out` unless --out names a file; diagnostics and usage go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mstd::cli
