#include <doctest.h>

#include <random>
#include <stdexcept>

#include "oracles.hpp"
#include "rotmaps/comb_map.hpp"

using namespace rotmaps;

namespace {

const Permutation kPi4 = Permutation::from_images({2, 1, 4, 3});

CombMap map4(const char* p) { return make_map(parse_cycles(p, 4), kPi4); }

// c -> ((c^P)^pi)^(P^-1) straight from the image vectors.
std::vector<Corner> rho_by_hand(const Permutation& p, const Permutation& pi) {
  auto pv = oracle::images_of(p);
  auto piv = oracle::images_of(pi);
  std::vector<Corner> pinv(pv.size());
  for (std::size_t i = 0; i < pv.size(); ++i) pinv[pv[i] - 1] = static_cast<Corner>(i + 1);
  return oracle::left_to_right(oracle::left_to_right(pv, piv), pinv);
}

}  // namespace

TEST_CASE("make_map") {
  CombMap id = make_map(Permutation(4), kPi4);
  CHECK(id == identity_map(normal_matching(2)));
  CombMap loops = make_map(kPi4, kPi4);
  CHECK(loops.vertices() == kPi4);
  CHECK_THROWS_AS(make_map(Permutation(3), parse_cycles("(1 2 3)", 3)), std::invalid_argument);
  CHECK_THROWS_AS(make_map(Permutation(4), parse_cycles("(1 2 3)", 4)), std::invalid_argument);
  CHECK_THROWS_AS(make_map(Permutation(4), parse_cycles("(1 2)", 4)), std::invalid_argument);
  CHECK_THROWS_AS(make_map(Permutation(6), kPi4), std::invalid_argument);
}

TEST_CASE("every permutation of order 6 makes a map with differing P and Q") {
  for (const Permutation& pi : oracle::all_matchings(6)) {
    for (const Permutation& p : oracle::all_permutations(6)) {
      CombMap m = make_map(p, pi);
      Permutation q = face_permutation(m);
      bool differing = true;
      for (Corner c = 1; c <= 6; ++c) differing = differing && p(c) != q(c);
      CHECK(differing);
      CHECK(is_matching(compose(inverse(p), q)));
    }
  }
}

TEST_CASE("normal matching") {
  CHECK(normal_matching(1).perm() == parse_cycles("(1 2)", 2));
  CHECK(normal_matching(2).perm() == kPi4);
  CHECK(normal_matching(3).perm() == parse_cycles("(1 2)(3 4)(5 6)", 6));
  CHECK_THROWS_AS(normal_matching(0), std::invalid_argument);
}

TEST_CASE("face permutation and dual") {
  CHECK(face_permutation(identity_map(normal_matching(2))) == kPi4);
  CHECK(face_permutation(map4("(1 2)(3 4)")).is_identity());
  CHECK(face_permutation(map4("(1 3)")) == parse_cycles("(1 4 3 2)", 4));

  CHECK(dual(identity_map(normal_matching(2))).vertices() == kPi4);
  CHECK(dual(map4("(1 3)")).vertices() == parse_cycles("(1 4 3 2)", 4));

  std::mt19937_64 rng(41);
  for (int i = 0; i < 50; ++i) {
    CombMap m = make_map(random_permutation(10, rng), random_matching(10, rng));
    CHECK(dual(dual(m)) == m);
    CHECK(face_permutation(dual(m)) == m.vertices());
  }
}

TEST_CASE("multiply, identity and reverse") {
  auto pi = normal_matching(2);
  CombMap id = identity_map(pi);
  CombMap t = map4("(1 4 3 2)");
  CHECK(multiply(id, t) == t);
  CHECK(multiply(t, reverse(t)) == id);
  CHECK(multiply(map4("(1 3)"), map4("(2 4)")).vertices() == parse_cycles("(1 3)(2 4)", 4));
  CHECK(reverse(id) == id);
  CHECK(reverse(t).vertices() == parse_cycles("(1 2 3 4)", 4));
  CHECK(reverse(reverse(t)) == t);

  CombMap other = make_map(Permutation(4), parse_cycles("(1 3)(2 4)", 4));
  CHECK_THROWS_AS(multiply(t, other), std::invalid_argument);
}

TEST_CASE("maps over a fixed matching form a copy of S_2m") {
  auto pi = normal_matching(2);
  auto perms = oracle::all_permutations(4);
  for (const auto& a : perms)
    for (const auto& b : perms) {
      CombMap ab = multiply(CombMap(a, pi), CombMap(b, pi));
      CHECK(ab.vertices() == compose(a, b));
      CHECK(ab.matching() == pi);
    }
  for (const auto& a : perms) {
    CHECK(multiply(CombMap(a, pi), reverse(CombMap(a, pi))) == identity_map(pi));
    CHECK(multiply(reverse(CombMap(a, pi)), CombMap(a, pi)) == identity_map(pi));
  }
}

TEST_CASE("products of maps and duals") {
  std::mt19937_64 rng(43);
  for (int i = 0; i < 100; ++i) {
    Permutation pi = random_matching(10, rng);
    CombMap s = make_map(random_permutation(10, rng), pi);
    CombMap t = make_map(random_permutation(10, rng), pi);
    Permutation sv = s.vertices(), sf = face_permutation(s);
    Permutation tv = t.vertices(), tf = face_permutation(t);

    CombMap st = multiply(s, t);
    CHECK(st.vertices() == compose(sv, tv));
    CHECK(face_permutation(st) == compose(sv, tf));

    CombMap s_dt = multiply(s, dual(t));
    CHECK(s_dt.vertices() == compose(sv, tf));
    CHECK(face_permutation(s_dt) == compose(sv, tv));

    CombMap ds_t = multiply(dual(s), t);
    CHECK(ds_t.vertices() == compose(sf, tv));
    CHECK(face_permutation(ds_t) == compose(sf, tf));

    CombMap ds_dt = multiply(dual(s), dual(t));
    CHECK(ds_dt.vertices() == compose(sf, tf));
    CHECK(face_permutation(ds_dt) == compose(sf, tv));
  }
}

TEST_CASE("e-matching") {
  CHECK(e_matching(identity_map(normal_matching(2))) == kPi4);
  CHECK(e_matching(map4("(1 3)")) == parse_cycles("(1 4)(2 3)", 4));
  CHECK(e_matching(map4("(1 2)(3 4)")) == kPi4);

  std::mt19937_64 rng(47);
  for (int i = 0; i < 200; ++i) {
    Permutation pi = random_matching(12, rng);
    CombMap m = make_map(random_permutation(12, rng), pi);
    Permutation rho = e_matching(m);
    CHECK(is_matching(rho));
    CHECK(oracle::images_of(rho) == rho_by_hand(m.vertices(), pi));
    CHECK(compose(rho, m.vertices()) == compose(m.vertices(), pi));
  }
}

TEST_CASE("edges and next edges") {
  CombMap id = identity_map(normal_matching(2));
  std::vector<EdgePair> expected{{1, 2}, {3, 4}};
  CHECK(edges(id) == expected);
  CHECK(next_edges(id) == expected);
  CHECK(edges(map4("(1 3)")) == std::vector<EdgePair>{{1, 4}, {2, 3}});

  std::mt19937_64 rng(53);
  for (int i = 0; i < 20; ++i) {
    CombMap m = make_map(random_permutation(16, rng), random_matching(16, rng));
    CHECK(edges(m).size() == 8);
    CHECK(next_edges(m).size() == 8);
  }
}

TEST_CASE("apply_transposition joins or splits one vertex") {
  CombMap id = identity_map(normal_matching(2));
  CombMap joined = apply_transposition(1, 3, id);
  CHECK(joined.vertices() == parse_cycles("(1 3)", 4));
  CHECK(cycle_count(joined.vertices()) == 3);
  CHECK(apply_transposition(1, 3, joined) == id);
  CHECK_THROWS_AS(apply_transposition(2, 2, id), std::invalid_argument);

  auto pi = normal_matching(3);
  for (const Permutation& p : oracle::all_permutations(6)) {
    CombMap m(p, pi);
    std::size_t before = cycle_count(p);
    for (Corner a = 1; a <= 6; ++a)
      for (Corner b = a + 1; b <= 6; ++b) {
        std::size_t after = cycle_count(apply_transposition(a, b, m).vertices());
        CHECK((after + 1 == before || before + 1 == after));
      }
  }
}

TEST_CASE("build_from_transpositions") {
  auto pi = normal_matching(4);
  auto chain = build_from_transpositions({}, pi);
  REQUIRE(chain.size() == 1);
  CHECK(chain.front() == identity_map(pi));

  std::mt19937_64 rng(59);
  for (int i = 0; i < 50; ++i) {
    Permutation p = random_permutation(8, rng);
    auto ts = generating_transpositions(p);
    auto maps = build_from_transpositions(ts, pi);
    CHECK(maps.size() == ts.size() + 1);
    CHECK(maps.back().vertices() == p);
    for (std::size_t k = 1; k < maps.size(); ++k)
      CHECK(maps[k].vertices() ==
            compose(transposition(ts[k - 1].first, ts[k - 1].second, 8), maps[k - 1].vertices()));
  }
  std::vector<Transposition> bad{{3, 3}};
  CHECK_THROWS_AS(build_from_transpositions(bad, pi), std::invalid_argument);
}
