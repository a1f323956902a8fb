#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace rotmaps::cli {

/// Exit codes: 0 success, 1 negative verdict (not isomorphic, failed
/// check), 2 malformed input.
inline constexpr int kOk = 0;
inline constexpr int kNegative = 1;
inline constexpr int kBadInput = 2;

/// Runs one subcommand; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rotmaps::cli
