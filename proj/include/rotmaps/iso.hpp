#pragma once

// Map isomorphism as simultaneous conjugacy: (P, pi1) and (Q, pi2) are
// isomorphic when some A has pi2^A = pi1 and Q^A = P.

#include <cstddef>
#include <optional>

#include "rotmaps/comb_map.hpp"

namespace rotmaps {

/// Largest order accepted by the exhaustive witness search.
inline constexpr std::size_t kMaxIsoOrder = 12;

struct Conjugator {
  Permutation a;

  bool operator==(const Conjugator&) const = default;
};

/// True when pi2^A = pi1 and Q^A = P.
bool is_witness(const CombMap& m1, const CombMap& m2, const Permutation& a);

/// Searches the m!*2^m permutations that carry pi2 onto pi1 for one that also
/// carries m2's rotation onto m1's. Cycle types of vertices and faces are
/// compared first. Throws std::invalid_argument on an order mismatch and
/// std::out_of_range when the order exceeds max_order.
std::optional<Conjugator> are_isomorphic(const CombMap& m1, const CombMap& m2,
                                         std::size_t max_order = kMaxIsoOrder);

/// Whether the witness lies in K_pi1 (commutes with pi1). This holds exactly
/// when both maps share one n-matching. Throws std::invalid_argument if a is
/// not a witness for (m1, m2).
bool same_class_criterion(const CombMap& m1, const CombMap& m2, const Conjugator& a);

}  // namespace rotmaps
