#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nearbip::cli {

// Exit codes.
inline constexpr int kSolved = 0;
inline constexpr int kNotNearBipartite = 1;
inline constexpr int kPrecondition = 2;
inline constexpr int kUsage = 64;
inline constexpr int kFileError = 66;

/// Runs one command; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nearbip::cli
