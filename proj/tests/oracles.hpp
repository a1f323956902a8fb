#pragma once

// Test-only brute-force helpers. They work on raw image vectors and only use
// the library to wrap results, so they stay independent of the code paths
// under test.

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

#include "rotmaps/permutation.hpp"

namespace oracle {

using rotmaps::Corner;
using rotmaps::Permutation;

/// Every permutation of order n, in lexicographic order of image sequences.
inline std::vector<Permutation> all_permutations(std::size_t n) {
  std::vector<Corner> images(n);
  std::iota(images.begin(), images.end(), Corner{1});
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation::from_images(images));
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

/// Every fixed-point-free involution on n corners, by recursive pairing of
/// the smallest free corner.
inline std::vector<Permutation> all_matchings(std::size_t n) {
  std::vector<Permutation> out;
  std::vector<Corner> images(n, 0);
  std::function<void()> rec = [&] {
    auto free = std::find(images.begin(), images.end(), Corner{0});
    if (free == images.end()) {
      out.push_back(Permutation::from_images(images));
      return;
    }
    Corner a = static_cast<Corner>(free - images.begin() + 1);
    for (Corner b = a + 1; b <= n; ++b) {
      if (images[b - 1] != 0) continue;
      images[a - 1] = b;
      images[b - 1] = a;
      rec();
      images[a - 1] = 0;
      images[b - 1] = 0;
    }
  };
  if (n % 2 == 0) rec();
  return out;
}

/// c -> (c^p)^q evaluated directly on image vectors.
inline std::vector<Corner> left_to_right(const std::vector<Corner>& p, const std::vector<Corner>& q) {
  std::vector<Corner> r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = q[p[i] - 1];
  return r;
}

inline std::vector<Corner> images_of(const Permutation& p) {
  return {p.images().begin(), p.images().end()};
}

}  // namespace oracle
