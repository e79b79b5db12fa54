#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace randsat::cli {

// Exit codes of `randsat solve`, following SAT-competition convention.
inline constexpr int kExitSat = 10;
inline constexpr int kExitUnknown = 20;
inline constexpr int kExitInputError = 1;

/// Runs the command line `args` (without the program name) and returns the
/// process exit code.
int run(const std::vector<std::string> &args, std::ostream &out,
        std::ostream &err);

} // namespace randsat::cli
