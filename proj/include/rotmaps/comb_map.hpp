#pragma once

// Combinatorial maps as a vertex rotation P over a fixed next-edge matching
// pi. The face permutation is P*pi, the edge matching is P*pi*P^-1.

#include <cstddef>
#include <span>
#include <vector>

#include "rotmaps/permutation.hpp"

namespace rotmaps {

/// Unordered corner pair, stored with first < second.
struct EdgePair {
  Corner first;
  Corner second;

  auto operator<=>(const EdgePair&) const = default;
};

/// Transpositions of an involution, sorted by smaller corner.
std::vector<EdgePair> transposition_pairs(const Permutation& involution);

/// A fixed-point-free involution of even order (the n-matching of a class
/// of maps).
class NextEdgeMatching {
 public:
  /// Throws std::invalid_argument unless pi is a matching.
  explicit NextEdgeMatching(Permutation pi);

  /// (1 2)(3 4)...(2m-1 2m). Throws for m < 1.
  static NextEdgeMatching normal(std::size_t m);

  const Permutation& perm() const noexcept { return pi_; }
  std::size_t order() const noexcept { return pi_.order(); }
  std::size_t edge_count() const noexcept { return pi_.order() / 2; }
  /// The m pairs of the matching ordered by their smaller corner.
  std::vector<EdgePair> pairs() const { return transposition_pairs(pi_); }

  bool operator==(const NextEdgeMatching&) const = default;

 private:
  Permutation pi_;
};

NextEdgeMatching normal_matching(std::size_t m);

class CombMap {
 public:
  /// Throws std::invalid_argument on order mismatch.
  CombMap(Permutation p, NextEdgeMatching pi);

  const Permutation& vertices() const noexcept { return p_; }
  const NextEdgeMatching& matching() const noexcept { return pi_; }
  const Permutation& pi() const noexcept { return pi_.perm(); }
  std::size_t order() const noexcept { return p_.order(); }
  std::size_t edge_count() const noexcept { return p_.order() / 2; }

  bool operator==(const CombMap&) const = default;

 private:
  Permutation p_;
  NextEdgeMatching pi_;
};

/// Validates and builds a map; every permutation is accepted once pi is a
/// matching of the same even order.
CombMap make_map(Permutation p, Permutation pi);

/// The identity map (I, pi): m isolated edges.
CombMap identity_map(const NextEdgeMatching& pi);

/// P*pi (the dual permutation written Q or P-bar).
Permutation face_permutation(const CombMap& m);

/// (Q, P): vertex permutation P*pi over the same pi.
CombMap dual(const CombMap& m);

/// (S.p*T.p, pi). Throws std::invalid_argument when the n-matchings differ.
CombMap multiply(const CombMap& s, const CombMap& t);

/// (P^-1, pi).
CombMap reverse(const CombMap& m);

/// rho = P*pi*P^-1, the unique matching with rho*P = P*pi.
Permutation e_matching(const CombMap& m);

/// Edge pairs (transpositions of rho).
std::vector<EdgePair> edges(const CombMap& m);
/// Next-edge pairs (transpositions of pi).
std::vector<EdgePair> next_edges(const CombMap& m);

/// Vertex permutation becomes (a b)*P: joins the vertices at corners a and
/// b, or splits the vertex holding both.
CombMap apply_transposition(Corner a, Corner b, const CombMap& m);

/// P_0 = I, P_k = (a_k b_k)*P_{k-1}. Returns all l+1 maps of the chain.
std::vector<CombMap> build_from_transpositions(std::span<const Transposition> ts,
                                               const NextEdgeMatching& pi);

/// Transpositions t_1..t_l with P = t_l * ... * t_1, ready to feed
/// build_from_transpositions.
std::vector<Transposition> generating_transpositions(const Permutation& p);

}  // namespace rotmaps
