#include "rotmaps/classes.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

namespace rotmaps {

namespace {

void check_bound(std::size_t m, std::size_t bound) {
  if (m > bound)
    throw std::out_of_range("enumeration for m=" + std::to_string(m) + " exceeds bound m<=" +
                            std::to_string(bound));
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("count exceeds 64 bits");
  return r;
}

// Index (1-based) of the pi-pair holding each corner.
std::vector<std::size_t> pair_index(const std::vector<EdgePair>& pairs, std::size_t n) {
  std::vector<std::size_t> index(n + 1, 0);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    index[pairs[i].first] = i + 1;
    index[pairs[i].second] = i + 1;
  }
  return index;
}

// Some R with conjugate(from, R) = to: pair k of `from` goes onto pair k of `to`.
Permutation pair_relabeling(const Permutation& from, const Permutation& to) {
  auto src = transposition_pairs(from);
  auto dst = transposition_pairs(to);
  std::vector<Corner> images(from.order());
  for (std::size_t k = 0; k < src.size(); ++k) {
    images[src[k].first - 1] = dst[k].first;
    images[src[k].second - 1] = dst[k].second;
  }
  return Permutation::from_images(std::move(images));
}

}  // namespace

bool commutes(const Permutation& a, const Permutation& b) { return compose(a, b) == compose(b, a); }

bool is_selfconjugate(const CombMap& m) { return conjugate(m.vertices(), m.pi()) == m.vertices(); }

Permutation rho_of_product(const CombMap& s, const CombMap& t) {
  if (!(s.matching() == t.matching()))
    throw std::invalid_argument("rho_of_product: maps have different n-matchings");
  return conjugate(e_matching(t), inverse(s.vertices()));
}

SignedPermutation encode_signed(const CombMap& m) {
  if (!is_selfconjugate(m))
    throw std::invalid_argument("encode_signed: map " + to_string(m.vertices()) +
                                " is not selfconjugate");
  auto pairs = m.matching().pairs();
  auto index = pair_index(pairs, m.order());
  std::vector<Corner> pair_images(pairs.size());
  std::vector<bool> flips(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    Corner low_image = m.vertices()(pairs[i].first);
    std::size_t j = index[low_image];
    pair_images[i] = static_cast<Corner>(j);
    flips[i] = low_image == pairs[j - 1].second;
  }
  return {Permutation::from_images(std::move(pair_images)), std::move(flips)};
}

CombMap decode_signed(const SignedPermutation& sp, const NextEdgeMatching& pi) {
  auto pairs = pi.pairs();
  if (sp.pair_perm.order() != pairs.size() || sp.flips.size() != pairs.size())
    throw std::invalid_argument("decode_signed: signed permutation has size " +
                                std::to_string(sp.pair_perm.order()) + ", n-matching has " +
                                std::to_string(pairs.size()) + " pairs");
  std::vector<Corner> images(pi.order());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const EdgePair& target = pairs[sp.pair_perm(static_cast<Corner>(i + 1)) - 1];
    bool flip = sp.flips[i];
    images[pairs[i].first - 1] = flip ? target.second : target.first;
    images[pairs[i].second - 1] = flip ? target.first : target.second;
  }
  return CombMap(Permutation::from_images(std::move(images)), pi);
}

std::optional<CombMap> find_selfconjugate(const NextEdgeMatching& pi,
                                          const std::function<bool(const CombMap&)>& pred) {
  const std::size_t m = pi.edge_count();
  if (m >= 63) throw std::out_of_range("selfconjugate enumeration: too many pairs");
  std::vector<Corner> pair_images(m);
  std::iota(pair_images.begin(), pair_images.end(), Corner{1});
  do {
    SignedPermutation sp{Permutation::from_images(pair_images), std::vector<bool>(m)};
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
      for (std::size_t i = 0; i < m; ++i) sp.flips[i] = (mask >> i) & 1U;
      CombMap candidate = decode_signed(sp, pi);
      if (pred(candidate)) return candidate;
    }
  } while (std::next_permutation(pair_images.begin(), pair_images.end()));
  return std::nullopt;
}

void for_each_selfconjugate(const NextEdgeMatching& pi,
                            const std::function<void(const CombMap&)>& visit) {
  find_selfconjugate(pi, [&](const CombMap& m) {
    visit(m);
    return false;
  });
}

std::vector<CombMap> enumerate_selfconjugate(const NextEdgeMatching& pi, std::size_t bound) {
  check_bound(pi.edge_count(), bound);
  std::vector<CombMap> out;
  out.reserve(class_size(pi.edge_count()));
  for_each_selfconjugate(pi, [&](const CombMap& m) { out.push_back(m); });
  return out;
}

std::vector<CombMap> enumerate_selfconjugate(std::size_t m, std::size_t bound) {
  check_bound(m, bound);
  return enumerate_selfconjugate(normal_matching(m), bound);
}

std::uint64_t factorial(std::size_t k) {
  std::uint64_t r = 1;
  for (std::size_t i = 2; i <= k; ++i) r = checked_mul(r, i);
  return r;
}

std::uint64_t odd_double_factorial(std::size_t m) {
  std::uint64_t r = 1;
  for (std::size_t i = 1; i <= m; ++i) r = checked_mul(r, 2 * i - 1);
  return r;
}

std::uint64_t class_count(std::size_t m) { return odd_double_factorial(m); }

std::uint64_t class_size(std::size_t m) {
  if (m >= 64) throw std::overflow_error("count exceeds 64 bits");
  return checked_mul(factorial(m), std::uint64_t{1} << m);
}

Permutation coset_map(const CombMap& m, const Permutation& sigma) {
  if (sigma.order() != m.order() || !is_matching(sigma))
    throw std::invalid_argument("coset_map: sigma " + to_string(sigma) +
                                " is not a matching of order " + std::to_string(m.order()));
  return conjugate(sigma, inverse(m.vertices()));
}

EMatchingClass::EMatchingClass(Permutation rho, NextEdgeMatching pi)
    : rho_(std::move(rho)),
      pi_(std::move(pi)),
      representative_([&] {
        if (rho_.order() != pi_.order() || !is_matching(rho_))
          throw std::invalid_argument("e-matching class: rho " + to_string(rho_) +
                                      " is not a matching of order " +
                                      std::to_string(pi_.order()));
        // e_matching(R) = pi^(R^-1), so R^-1 relabels pi onto rho.
        return CombMap(inverse(pair_relabeling(pi_.perm(), rho_)), pi_);
      }()) {}

bool EMatchingClass::contains(const CombMap& m) const {
  return m.matching() == pi_ && e_matching(m) == rho_;
}

void EMatchingClass::for_each_member(const std::function<void(const CombMap&)>& visit) const {
  for_each_selfconjugate(pi_, [&](const CombMap& a) { visit(multiply(representative_, a)); });
}

std::vector<CombMap> EMatchingClass::members(std::size_t bound) const {
  check_bound(pi_.edge_count(), bound);
  std::vector<CombMap> out;
  for_each_member([&](const CombMap& m) { out.push_back(m); });
  return out;
}

std::vector<CensusEntry> census(const NextEdgeMatching& pi, std::size_t bound) {
  check_bound(pi.edge_count(), bound);
  std::map<std::vector<Corner>, std::uint64_t> buckets;
  std::vector<Corner> images(pi.order());
  std::iota(images.begin(), images.end(), Corner{1});
  do {
    CombMap m(Permutation::from_images(images), pi);
    Permutation rho = e_matching(m);
    ++buckets[std::vector<Corner>(rho.images().begin(), rho.images().end())];
  } while (std::next_permutation(images.begin(), images.end()));

  std::vector<CensusEntry> out;
  for (auto& [key, count] : buckets) out.push_back({Permutation::from_images(key), count});
  std::sort(out.begin(), out.end(), [](const CensusEntry& a, const CensusEntry& b) {
    return to_string(a.rho) < to_string(b.rho);
  });
  return out;
}

std::vector<CensusEntry> census(std::size_t m, std::size_t bound) {
  check_bound(m, bound);
  return census(normal_matching(m), bound);
}

}  // namespace rotmaps
