#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace root_enclose {

// Exit codes: 0 success / property held, 1 property falsified or solver
// failure, 2 usage or input error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFalsified = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace root_enclose
