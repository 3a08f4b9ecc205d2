#pragma once

#include <string>
#include <vector>

namespace sexa::cli {

// Exit codes: 0 success, 1 domain or parse error in the input, 2 usage error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitUsage = 2;

struct RunResult {
  int exit_code = kExitOk;
  std::string out;
  std::string err;
};

// Runs one command line (without the program name). Deterministic: the same
// arguments always produce byte-identical output.
RunResult run(const std::vector<std::string>& args);

}  // namespace sexa::cli
