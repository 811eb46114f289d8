#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace thmat::cli {

// Exit codes shared by every subcommand.
inline constexpr int kOk = 0;
inline constexpr int kSelftestFailed = 1;
inline constexpr int kUsage = 2;
inline constexpr int kRejected = 3;
inline constexpr int kNotGeneric = 4;

// Entry point without the program name; all output goes to the given streams.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace thmat::cli
