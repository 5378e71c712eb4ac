#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace permband::cli {

inline constexpr const char* kSchema = "permband/1";
inline constexpr const char* kVersion = "1.0.0";

// Runs one command line (without the program name). Exit codes: 0 success,
// 1 internal violation, 2 usage or input error, 3 resource refusal.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace permband::cli
