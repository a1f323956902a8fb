#include <doctest.h>

#include <map>
#include <random>
#include <set>
#include <stdexcept>

#include "oracles.hpp"
#include "rotmaps/classes.hpp"
#include "rotmaps/knot.hpp"

using namespace rotmaps;

namespace {

const Permutation kPi4 = Permutation::from_images({2, 1, 4, 3});

CombMap map4(const char* p) { return make_map(parse_cycles(p, 4), kPi4); }

std::vector<Color> colors(const WellColoring& w) { return {w.colors().begin(), w.colors().end()}; }

constexpr Color C1 = Color::C1;
constexpr Color C2 = Color::C2;

// Knot invariants checked from scratch: mu follows pi on C1 and rho on C2,
// and conjugates pi onto rho corner-wise.
bool knot_holds(const Knot& k) {
  for (Corner c = 1; c <= k.mu.order(); ++c) {
    Corner expected = k.coloring(c) == C1 ? k.pi(c) : k.rho(c);
    if (k.mu(c) != expected) return false;
    // (c^mu)^rho = (c^pi)^mu
    if (k.rho(k.mu(c)) != k.mu(k.pi(c))) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("well coloring examples") {
  CombMap id = identity_map(normal_matching(2));
  CHECK(colors(well_color(id)) == std::vector<Color>{C1, C2, C1, C2});
  CHECK(traversal_cycles(id.pi(), e_matching(id)) == std::vector<Cycle>{{1, 2}, {3, 4}});

  CombMap path = map4("(1 3)");
  CHECK(traversal_cycles(path.pi(), e_matching(path)) == std::vector<Cycle>{{1, 2, 3, 4}});
  CHECK(colors(well_color(path)) == std::vector<Color>{C1, C2, C1, C2});
}

TEST_CASE("well colorings exist for every map at m <= 3") {
  for (std::size_t m = 1; m <= 3; ++m) {
    auto pi = normal_matching(m);
    for (const Permutation& p : oracle::all_permutations(2 * m)) {
      CombMap map(p, pi);
      Permutation rho = e_matching(map);
      auto walks = traversal_cycles(pi.perm(), rho);
      WellColoring w = well_color(map);
      CHECK(is_well_coloring(w, pi.perm(), rho));
      for (const auto& walk : walks) {
        CHECK(walk.size() % 2 == 0);
        for (std::size_t i = 0; i < walk.size(); ++i) CHECK(w(walk[i]) == (i % 2 == 0 ? C1 : C2));
      }
    }
  }
}

TEST_CASE("well colorings on random large maps") {
  std::mt19937_64 rng(71);
  for (int i = 0; i < 200; ++i) {
    CombMap m = make_map(random_permutation(50, rng), random_matching(50, rng));
    WellColoring w = well_color(m);
    CHECK(is_well_coloring(w, m.pi(), e_matching(m)));
  }
}

TEST_CASE("knot_of") {
  Knot path = knot_of(map4("(1 3)"));
  CHECK(path.mu == parse_cycles("(1 2 3 4)", 4));
  CHECK(conjugate(kPi4, path.mu) == parse_cycles("(2 3)(4 1)", 4));
  CHECK(conjugate(kPi4, path.mu) == e_matching(map4("(1 3)")));

  Knot id = knot_of(identity_map(normal_matching(2)));
  CHECK(id.mu == kPi4);

  std::mt19937_64 rng(73);
  for (int i = 0; i < 200; ++i) {
    CombMap m = make_map(random_permutation(40, rng), random_matching(40, rng));
    Knot k = knot_of(m);
    CHECK(knot_holds(k));
    CHECK(conjugate(m.pi(), k.mu) == e_matching(m));
    CHECK(conjugate(m.pi(), inverse(k.mu)) == e_matching(m));
  }
}

TEST_CASE("the knot is shared by a whole e-matching class") {
  for (std::size_t m = 1; m <= 3; ++m) {
    auto pi = normal_matching(m);
    std::map<Permutation, Knot> by_rho;
    for (const Permutation& p : oracle::all_permutations(2 * m)) {
      CombMap map(p, pi);
      Knot k = knot_of(map);
      auto [it, inserted] = by_rho.emplace(k.rho, k);
      if (!inserted) CHECK(it->second == k);
    }
    CHECK(by_rho.size() == class_count(m));
  }
}

TEST_CASE("reversing knot cycles") {
  Knot path = knot_of(map4("(1 3)"));
  Knot reversed = reverse_knot_cycle(path, 0);
  CHECK(reversed.mu == parse_cycles("(1 4 3 2)", 4));
  CHECK(reversed.mu == inverse(path.mu));
  CHECK(conjugate(kPi4, reversed.mu) == path.rho);
  CHECK(colors(reversed.coloring) == std::vector<Color>{C2, C1, C2, C1});
  CHECK(reverse_knot_cycle(reversed, 0) == path);
  CHECK_THROWS_AS(reverse_knot_cycle(path, 1), std::out_of_range);

  // two 2-cycles: four orientation variants, all knots
  Knot id = knot_of(identity_map(normal_matching(2)));
  std::set<std::vector<Color>> variants;
  for (int mask = 0; mask < 4; ++mask) {
    Knot k = id;
    if (mask & 1) k = reverse_knot_cycle(k, 0);
    if (mask & 2) k = reverse_knot_cycle(k, 1);
    CHECK(knot_holds(k));
    CHECK(is_well_coloring(k.coloring, k.pi, k.rho));
    variants.insert(colors(k.coloring));
  }
  CHECK(variants.size() == 4);

  // reversing every cycle gives mu^-1
  std::mt19937_64 rng(79);
  for (int i = 0; i < 50; ++i) {
    CombMap m = make_map(random_permutation(20, rng), random_matching(20, rng));
    Knot k = knot_of(m);
    std::size_t count = cycles(k.mu).cycles.size();
    Knot r = k;
    for (std::size_t c = 0; c < count; ++c) {
      r = reverse_knot_cycle(r, c);
      CHECK(knot_holds(r));
    }
    CHECK(r.mu == inverse(k.mu));
  }
}

TEST_CASE("knot_from_coloring rejects bad colorings") {
  CombMap path = map4("(1 3)");
  WellColoring bad({C1, C1, C2, C2});
  CHECK_THROWS_AS(knot_from_coloring(path.pi(), e_matching(path), bad), std::invalid_argument);
}

TEST_CASE("decompose") {
  Decomposition d = decompose(map4("(1 3)"));
  CHECK(d.knot.mu == parse_cycles("(1 2 3 4)", 4));
  CHECK(d.selfconjugate.vertices() == parse_cycles("(1 4)(2 3)", 4));
  CHECK(compose(d.knot.mu, d.selfconjugate.vertices()) == parse_cycles("(1 3)", 4));
  CHECK(conjugate(d.selfconjugate.vertices(), kPi4) == d.selfconjugate.vertices());

  Decomposition id = decompose(identity_map(normal_matching(2)));
  CHECK(id.knot.mu == kPi4);
  CHECK(id.selfconjugate.vertices() == kPi4);

  auto pi = normal_matching(3);
  for (const Permutation& p : oracle::all_permutations(6)) {
    CombMap m(p, pi);
    Decomposition x = decompose(m);
    CHECK(compose(x.knot.mu, x.selfconjugate.vertices()) == p);
    CHECK(multiply(x.knot_map, x.selfconjugate) == m);
    CHECK(is_selfconjugate(x.selfconjugate));
  }
}
