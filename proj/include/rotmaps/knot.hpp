#pragma once

// Well colorings and combinatorial knots.
//
// Starting from a corner c1, the alternating walk c2 = c1^pi, c3 = c2^rho,
// c4 = c3^pi, ... always closes after an even number of steps. Coloring odd
// positions C1 and even positions C2 makes every pi-pair and every rho-pair
// bichromatic. The knot mu follows pi on C1 and rho on C2, so its cycles are
// exactly the walks, and pi^mu = rho.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "rotmaps/comb_map.hpp"

namespace rotmaps {

enum class Color : std::uint8_t { C1, C2 };

std::string to_string(Color c);

class WellColoring {
 public:
  WellColoring() = default;
  explicit WellColoring(std::vector<Color> colors) : colors_(std::move(colors)) {}

  Color operator()(Corner c) const noexcept { return colors_[c - 1]; }
  std::size_t order() const noexcept { return colors_.size(); }
  std::span<const Color> colors() const noexcept { return colors_; }

  bool operator==(const WellColoring&) const = default;

 private:
  std::vector<Color> colors_;
};

/// True when every pair of both involutions has one corner of each color.
bool is_well_coloring(const WellColoring& coloring, const Permutation& pi, const Permutation& rho);

/// The alternating pi/rho walks. Each walk starts at the smallest corner not
/// yet visited, so walks come out in canonical cycle order.
std::vector<Cycle> traversal_cycles(const Permutation& pi, const Permutation& rho);

/// Odd walk positions C1, even positions C2.
WellColoring well_color(const CombMap& m);

struct Knot {
  Permutation mu;
  WellColoring coloring;
  Permutation pi;
  Permutation rho;

  bool operator==(const Knot&) const = default;
};

/// c^mu = c^pi on C1 and c^rho on C2. Throws std::invalid_argument if the
/// coloring is not a well coloring for (pi, rho).
Knot knot_from_coloring(const Permutation& pi, const Permutation& rho, WellColoring coloring);

/// The canonical knot of a map. It depends only on pi and the e-matching.
Knot knot_of(const CombMap& m);

/// Reverses cycle `cycle_index` of cycles(mu) (canonical order, 0-based) and
/// swaps the colors on it. Throws std::out_of_range on a bad index.
Knot reverse_knot_cycle(const Knot& k, std::size_t cycle_index);

struct Decomposition {
  Knot knot;
  /// (mu, pi) as a map.
  CombMap knot_map;
  /// mu^-1 * P, a member of K_pi.
  CombMap selfconjugate;
};

/// M = knot_map * selfconjugate.
Decomposition decompose(const CombMap& m);

}  // namespace rotmaps
