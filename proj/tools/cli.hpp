#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hacs::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitInput = 2;

/// Environment variable naming the default output directory of bench/ablate.
inline constexpr const char* kOutputDirEnv = "HACS_OUTPUT_DIR";

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hacs::cli
