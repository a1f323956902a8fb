#include "rotmaps/verify.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "rotmaps/classes.hpp"
#include "rotmaps/comb_map.hpp"
#include "rotmaps/knot.hpp"

namespace rotmaps {

namespace {

constexpr std::size_t kRandomPairs = 1000;
constexpr std::size_t kCosetSamples = 64;
// Above these sizes the quadratic checks switch to seeded samples.
constexpr std::size_t kClosurePairLimit = 200000;
constexpr std::size_t kCosetClassLimit = 128;

template <typename Visit>
void for_each_map(const NextEdgeMatching& pi, Visit&& visit) {
  std::vector<Corner> images(pi.order());
  std::iota(images.begin(), images.end(), Corner{1});
  do {
    visit(CombMap(Permutation::from_images(images), pi));
  } while (std::next_permutation(images.begin(), images.end()));
}

CheckResult check_census(std::size_t m, const std::vector<CensusEntry>& table) {
  const auto classes = class_count(m);
  const auto size = class_size(m);
  std::uint64_t total = 0;
  bool sizes_ok = true;
  for (const auto& entry : table) {
    total += entry.count;
    sizes_ok = sizes_ok && entry.count == size;
  }
  std::ostringstream detail;
  detail << "classes=" << table.size() << " (expected " << classes << "), every class size "
         << (sizes_ok ? "=" : "!=") << ' ' << size << ", total=" << total << " (expected "
         << factorial(2 * m) << ")";
  return {"census", table.size() == classes && sizes_ok && total == factorial(2 * m),
          detail.str()};
}

CheckResult check_selfconjugate_group(const NextEdgeMatching& pi, std::mt19937_64& rng) {
  const std::size_t m = pi.edge_count();
  auto group = enumerate_selfconjugate(pi, m);
  std::set<Permutation> members;
  for (const auto& g : group) members.insert(g.vertices());

  std::uint64_t filtered = 0;
  for_each_map(pi, [&](const CombMap& map) {
    if (commutes(map.vertices(), pi.perm())) ++filtered;
  });

  bool ok = members.size() == group.size() && group.size() == class_size(m) &&
            filtered == group.size() && members.count(Permutation(pi.order())) == 1;
  for (const auto& s : group)
    ok = ok && is_selfconjugate(s) && members.count(reverse(s).vertices()) == 1;
  const bool exhaustive = group.size() * group.size() <= kClosurePairLimit;
  if (exhaustive) {
    for (const auto& s : group)
      for (const auto& t : group) ok = ok && members.count(multiply(s, t).vertices()) == 1;
  } else {
    for (std::size_t i = 0; i < kClosurePairLimit; ++i) {
      const auto& s = group[rng() % group.size()];
      const auto& t = group[rng() % group.size()];
      ok = ok && members.count(multiply(s, t).vertices()) == 1;
    }
  }
  std::ostringstream detail;
  detail << "|K_pi|=" << group.size() << " (expected " << class_size(m)
         << "), commuting filter=" << filtered << ", closed under multiply ("
         << (exhaustive ? "all pairs" : std::to_string(kClosurePairLimit) + " sampled pairs")
         << ") and reverse, has identity";
  return {"selfconjugate subgroup", ok, detail.str()};
}

CheckResult check_knots_and_decomposition(const NextEdgeMatching& pi, CheckResult& decomposition) {
  std::uint64_t maps = 0, knot_failures = 0, decomposition_failures = 0;
  for_each_map(pi, [&](const CombMap& map) {
    ++maps;
    Permutation rho = e_matching(map);
    try {
      Knot k = knot_of(map);
      bool even = true;
      for (const auto& walk : traversal_cycles(pi.perm(), rho)) even = even && walk.size() % 2 == 0;
      if (!even || conjugate(pi.perm(), k.mu) != rho || !is_well_coloring(k.coloring, pi.perm(), rho))
        ++knot_failures;
    } catch (const std::exception&) {
      ++knot_failures;
    }
    try {
      Decomposition d = decompose(map);
      if (multiply(d.knot_map, d.selfconjugate) != map || !is_selfconjugate(d.selfconjugate))
        ++decomposition_failures;
    } catch (const std::exception&) {
      ++decomposition_failures;
    }
  });
  decomposition = {"knot decomposition", decomposition_failures == 0,
                   std::to_string(maps) + " maps, P = mu*A with A selfconjugate, " +
                       std::to_string(decomposition_failures) + " failures"};
  return {"knot conjugates pi to rho", knot_failures == 0,
          std::to_string(maps) + " maps, pi^mu = rho with even walks and a well coloring, " +
              std::to_string(knot_failures) + " failures"};
}

CheckResult check_product_law(const NextEdgeMatching& pi, std::mt19937_64& rng) {
  std::size_t failures = 0;
  for (std::size_t i = 0; i < kRandomPairs; ++i) {
    CombMap s(random_permutation(pi.order(), rng), pi);
    CombMap t(random_permutation(pi.order(), rng), pi);
    if (e_matching(multiply(s, t)) != rho_of_product(s, t)) ++failures;
  }
  return {"e-matching of a product", failures == 0,
          std::to_string(kRandomPairs) + " random pairs, rho_(S*T) = rho_T^(S^-1), " +
              std::to_string(failures) + " failures"};
}

CheckResult check_cosets(const NextEdgeMatching& pi, const std::vector<CensusEntry>& table,
                         std::mt19937_64& rng) {
  const std::size_t m = pi.edge_count();
  std::vector<CombMap> sample;
  if (factorial(2 * m) <= 720) {
    for_each_map(pi, [&](const CombMap& map) { sample.push_back(map); });
  } else {
    for (std::size_t i = 0; i < kCosetSamples; ++i)
      sample.emplace_back(random_permutation(pi.order(), rng), pi);
  }
  std::vector<const CensusEntry*> sigmas;
  for (const auto& entry : table) sigmas.push_back(&entry);
  if (sigmas.size() > kCosetClassLimit) {
    std::shuffle(sigmas.begin(), sigmas.end(), rng);
    sigmas.resize(kCosetClassLimit);
  }
  std::size_t failures = 0;
  for (const CensusEntry* sigma : sigmas) {
    const CensusEntry& entry = *sigma;
    EMatchingClass k_sigma(entry.rho, pi);
    auto members = k_sigma.members(m);
    for (const auto& p : sample) {
      Permutation target = coset_map(p, entry.rho);
      std::set<Permutation> products;
      bool landed = true;
      for (const auto& q : members) {
        CombMap pq = multiply(p, q);
        landed = landed && e_matching(pq) == target;
        products.insert(pq.vertices());
      }
      if (!landed || products.size() != class_size(m)) ++failures;
    }
  }
  return {"coset law", failures == 0,
          std::to_string(sample.size()) + " maps x " + std::to_string(sigmas.size()) +
              " classes, P*K_sigma = K_(sigma^(P^-1)), " + std::to_string(failures) + " failures"};
}

CheckResult check_signed_bijection(const NextEdgeMatching& pi) {
  const std::size_t m = pi.edge_count();
  std::size_t failures = 0, count = 0;
  std::set<std::pair<Permutation, std::vector<bool>>> codes;
  for_each_selfconjugate(pi, [&](const CombMap& s) {
    ++count;
    SignedPermutation sp = encode_signed(s);
    codes.insert({sp.pair_perm, sp.flips});
    if (decode_signed(sp, pi) != s) ++failures;
  });
  bool ok = failures == 0 && codes.size() == count && count == class_size(m);
  return {"signed permutation bijection", ok,
          std::to_string(count) + " elements of K_pi, " + std::to_string(codes.size()) +
              " distinct codes, " + std::to_string(failures) + " round-trip failures"};
}

}  // namespace

std::vector<CheckResult> verify_theorems(std::size_t m, std::uint64_t seed, std::size_t bound) {
  if (m < 1) throw std::invalid_argument("verify needs m >= 1");
  if (m > bound)
    throw std::out_of_range("verify for m=" + std::to_string(m) + " exceeds bound m<=" +
                            std::to_string(bound));
  std::mt19937_64 rng(seed);
  NextEdgeMatching pi = normal_matching(m);
  auto table = census(pi, bound);

  std::vector<CheckResult> results;
  results.push_back(check_census(m, table));
  results.push_back(check_selfconjugate_group(pi, rng));
  CheckResult decomposition;
  results.push_back(check_knots_and_decomposition(pi, decomposition));
  results.push_back(decomposition);
  results.push_back(check_product_law(pi, rng));
  results.push_back(check_cosets(pi, table, rng));
  results.push_back(check_signed_bijection(pi));
  return results;
}

}  // namespace rotmaps
