#pragma once

// Permutations over a finite set of corners 1..n.
//
// Conventions used throughout the library:
//   * corners are 1-based at every interface;
//   * the image of corner c under P is written c^P (postfix action);
//   * products are read left to right: c^(P*Q) = (c^P)^Q.
//
// Worked example: compose((1 3), (1 2)(3 4)) = (1 4 3 2), since
// 1 -> 3 -> 4, 2 -> 2 -> 1, 3 -> 1 -> 2 and 4 -> 4 -> 3.

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace rotmaps {

using Corner = std::uint32_t;
using Cycle = std::vector<Corner>;
using Transposition = std::pair<Corner, Corner>;

/// Disjoint cycle decomposition. Produced by cycles() in canonical order:
/// every cycle starts at its minimum corner, cycles sorted by that minimum,
/// fixed points listed as length-1 cycles.
struct CycleForm {
  std::vector<Cycle> cycles;

  bool operator==(const CycleForm&) const = default;
};

class Permutation {
 public:
  Permutation() = default;

  /// Identity on n corners.
  explicit Permutation(std::size_t n);

  /// images[i] is the image of corner i+1. Throws std::invalid_argument if
  /// the sequence is not a bijection on 1..n.
  static Permutation from_images(std::vector<Corner> images);

  /// Builds a permutation of order n from disjoint cycles; unlisted corners
  /// are fixed.
  static Permutation from_cycles(const CycleForm& form, std::size_t n);

  std::size_t order() const noexcept { return images_.size(); }

  /// c^P. Corner must be in 1..order().
  Corner operator()(Corner c) const noexcept { return images_[c - 1]; }

  std::span<const Corner> images() const noexcept { return images_; }

  bool is_identity() const noexcept;

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

 private:
  struct Unchecked {};
  Permutation(std::vector<Corner> images, Unchecked) : images_(std::move(images)) {}

  friend Permutation compose(const Permutation&, const Permutation&);
  friend Permutation inverse(const Permutation&);
  friend Permutation conjugate(const Permutation&, const Permutation&);

  std::vector<Corner> images_;
};

/// R with c^R = (c^P)^Q.
Permutation compose(const Permutation& p, const Permutation& q);
Permutation inverse(const Permutation& p);
/// P^Q = Q^-1 * P * Q. A cycle (c1 c2 ...) of P becomes (c1^Q c2^Q ...).
Permutation conjugate(const Permutation& p, const Permutation& q);

/// The transposition (a b) on n corners.
Permutation transposition(Corner a, Corner b, std::size_t n);

CycleForm cycles(const Permutation& p);
std::size_t cycle_count(const Permutation& p);
/// Cycle lengths in ascending order (fixed points included).
std::vector<std::size_t> cycle_type(const Permutation& p);

bool is_involution(const Permutation& p);
/// Involution without fixed points.
bool is_matching(const Permutation& p);

/// Canonical cycle notation: fixed points omitted, identity prints as "()".
std::string to_string(const Permutation& p);

/// Parses cycle notation, e.g. "(1 2)(3,4)". Empty text or "()" is the
/// identity. Throws std::invalid_argument on malformed text, corners out of
/// 1..n, or a repeated corner.
Permutation parse_cycles(std::string_view text, std::size_t n);

/// Writes (c1 c2 ... ck) as (ck ck-1) ... (c2 c1). The list composed left
/// to right gives back the cycle; a fixed point gives an empty list.
std::vector<Transposition> cycle_to_transpositions(std::span<const Corner> cycle);

/// Product of a list of transpositions, read left to right.
Permutation compose_transpositions(std::span<const Transposition> ts, std::size_t n);

/// Uniform random permutation of order n.
Permutation random_permutation(std::size_t n, std::mt19937_64& rng);
/// Uniform random fixed-point-free involution of even order n.
Permutation random_matching(std::size_t n, std::mt19937_64& rng);

}  // namespace rotmaps
