#pragma once

// Fixed-edge classes K_rho (all maps over pi sharing the e-matching rho) and
// the selfconjugate subgroup K_pi, the commutant of pi. K_pi has m!*2^m
// elements and (2m-1)!! left cosets, one per matching on 2m corners.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "rotmaps/comb_map.hpp"

namespace rotmaps {

/// Default upper limit on m for exhaustive enumerations ((2m)! = 40320 at 4).
inline constexpr std::size_t kDefaultEnumerationBound = 4;

/// A selfconjugate map written as a permutation of the m pairs of pi plus a
/// flip bit per pair. Pairs are indexed 1..m in order of their smaller corner.
/// pair_perm(i) = j when P carries pair i onto pair j; flips[i-1] is set when
/// the smaller corner of pair i goes to the larger corner of pair j.
struct SignedPermutation {
  Permutation pair_perm;
  std::vector<bool> flips;

  bool operator==(const SignedPermutation&) const = default;
};

bool commutes(const Permutation& a, const Permutation& b);

/// P^pi = P, equivalently e_matching(m) = pi.
bool is_selfconjugate(const CombMap& m);

/// e_matching(T) conjugated by S^-1, i.e. the e-matching of S*T.
Permutation rho_of_product(const CombMap& s, const CombMap& t);

/// Throws std::invalid_argument if the map is not selfconjugate.
SignedPermutation encode_signed(const CombMap& m);
/// Throws std::invalid_argument on size mismatch with pi.
CombMap decode_signed(const SignedPermutation& sp, const NextEdgeMatching& pi);

/// Visits all m!*2^m elements of K_pi by decoding every signed permutation:
/// pair permutations in lexicographic order, flips as a binary counter.
void for_each_selfconjugate(const NextEdgeMatching& pi,
                            const std::function<void(const CombMap&)>& visit);

/// First element of K_pi, in the same order, satisfying pred.
std::optional<CombMap> find_selfconjugate(const NextEdgeMatching& pi,
                                          const std::function<bool(const CombMap&)>& pred);

/// Throws std::out_of_range when m exceeds the bound.
std::vector<CombMap> enumerate_selfconjugate(const NextEdgeMatching& pi,
                                             std::size_t bound = kDefaultEnumerationBound);
std::vector<CombMap> enumerate_selfconjugate(std::size_t m,
                                             std::size_t bound = kDefaultEnumerationBound);

/// Exact integer helpers; throw std::overflow_error past 64 bits.
std::uint64_t factorial(std::size_t k);
std::uint64_t odd_double_factorial(std::size_t m);  // (2m-1)!!

/// Number of fixed-edge classes, (2m-1)!!.
std::uint64_t class_count(std::size_t m);
/// Size of every fixed-edge class, m!*2^m.
std::uint64_t class_size(std::size_t m);

/// rho^(P^-1): the class that M*K_sigma lands in.
Permutation coset_map(const CombMap& m, const Permutation& sigma);

/// K_rho over a fixed pi, enumerated as R*K_pi for a representative R.
class EMatchingClass {
 public:
  /// Throws std::invalid_argument unless rho is a matching of pi's order.
  EMatchingClass(Permutation rho, NextEdgeMatching pi);

  const Permutation& rho() const noexcept { return rho_; }
  const NextEdgeMatching& matching() const noexcept { return pi_; }

  /// Some map with e-matching rho.
  const CombMap& representative() const noexcept { return representative_; }

  bool contains(const CombMap& m) const;
  void for_each_member(const std::function<void(const CombMap&)>& visit) const;
  std::vector<CombMap> members(std::size_t bound = kDefaultEnumerationBound) const;

 private:
  Permutation rho_;
  NextEdgeMatching pi_;
  CombMap representative_;
};

struct CensusEntry {
  Permutation rho;
  std::uint64_t count;
};

/// Every permutation of order 2m bucketed by e-matching, sorted by the
/// canonical cycle string of rho. Throws std::out_of_range past the bound.
std::vector<CensusEntry> census(const NextEdgeMatching& pi,
                                std::size_t bound = kDefaultEnumerationBound);
std::vector<CensusEntry> census(std::size_t m, std::size_t bound = kDefaultEnumerationBound);

}  // namespace rotmaps
