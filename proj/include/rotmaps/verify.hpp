#pragma once

// Exhaustive and sampled checks of the counting and structure theorems at a
// given m, as run by `rotmaps verify`.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace rotmaps {

inline constexpr std::uint64_t kDefaultSeed = 0x5eed2024;

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Runs every check over the normal matching on 2m corners. Throws
/// std::out_of_range when m exceeds the bound.
std::vector<CheckResult> verify_theorems(std::size_t m, std::uint64_t seed = kDefaultSeed,
                                         std::size_t bound = 4);

}  // namespace rotmaps
