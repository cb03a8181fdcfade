#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hrr2::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDisagreement = 1;
inline constexpr int kExitInputError = 2;

/// Runs one command. `args` excludes the program name. The JSON report goes
/// to `out` (one document, trailing newline); diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hrr2::cli
