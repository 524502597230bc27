#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace abcins::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitRuntime = 1;  // runtime error, or a verification reported failures
inline constexpr int kExitUsage = 2;

/// Name of the environment variable that supplies the directory for relative --out paths.
inline constexpr const char* kOutputDirEnv = "ABCINS_OUTPUT_DIR";

/// Runs the command line; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace abcins::cli
