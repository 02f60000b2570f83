#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace flagdress::cli {

// Exit codes.
inline constexpr int kHolds = 0;   // every checked property holds
inline constexpr int kFails = 1;   // a checked property fails
inline constexpr int kBadInput = 2; // input or usage error

// Runs one command; `args` excludes the program name. Reports go to `out`
// (or --output), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace flagdress::cli
