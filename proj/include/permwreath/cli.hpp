#pragma once

#include <string>
#include <vector>

#include "permwreath/permutation.hpp"

namespace permwreath::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;  // verdict commands answering "no"
inline constexpr int kExitUsage = 2;
inline constexpr int kExitLimit = 3;     // a cap was hit

struct CommandResult {
  int exit_code = kExitOk;
  std::string out;
  std::string err;
};

/// Runs one command line (without the program name) and captures its output.
CommandResult execute(const std::vector<std::string>& args);

/// Plot of a permutation, top row = largest value.
std::string ascii_plot(const Permutation& p);

}  // namespace permwreath::cli
