#include "rotmaps/comb_map.hpp"

#include <algorithm>
#include <stdexcept>

namespace rotmaps {

std::vector<EdgePair> transposition_pairs(const Permutation& involution) {
  std::vector<EdgePair> out;
  for (Corner c = 1; c <= involution.order(); ++c) {
    Corner d = involution(c);
    if (c < d) out.push_back({c, d});
  }
  return out;
}

NextEdgeMatching::NextEdgeMatching(Permutation pi) : pi_(std::move(pi)) {
  if (pi_.order() == 0 || pi_.order() % 2 != 0)
    throw std::invalid_argument("n-matching needs a positive even order, got " +
                                std::to_string(pi_.order()));
  if (!is_matching(pi_))
    throw std::invalid_argument("n-matching " + to_string(pi_) + " is not a matching");
}

NextEdgeMatching NextEdgeMatching::normal(std::size_t m) {
  if (m < 1) throw std::invalid_argument("normal matching needs m >= 1");
  std::vector<Corner> images(2 * m);
  for (Corner c = 1; c <= 2 * m; c += 2) {
    images[c - 1] = c + 1;
    images[c] = c;
  }
  return NextEdgeMatching(Permutation::from_images(std::move(images)));
}

NextEdgeMatching normal_matching(std::size_t m) { return NextEdgeMatching::normal(m); }

CombMap::CombMap(Permutation p, NextEdgeMatching pi) : p_(std::move(p)), pi_(std::move(pi)) {
  if (p_.order() != pi_.order())
    throw std::invalid_argument("map: vertex permutation has order " +
                                std::to_string(p_.order()) + " but n-matching has order " +
                                std::to_string(pi_.order()));
  // P and Q = P*pi differ at every corner because pi has no fixed point.
  for (Corner c = 1; c <= p_.order(); ++c)
    if (p_(c) == pi_.perm()(p_(c)))
      throw std::logic_error("map: P and P*pi agree at corner " + std::to_string(c));
}

CombMap make_map(Permutation p, Permutation pi) {
  if (p.order() != pi.order())
    throw std::invalid_argument("map: order mismatch between p and pi");
  if (p.order() % 2 != 0) throw std::invalid_argument("map: order must be even");
  return CombMap(std::move(p), NextEdgeMatching(std::move(pi)));
}

CombMap identity_map(const NextEdgeMatching& pi) { return CombMap(Permutation(pi.order()), pi); }

Permutation face_permutation(const CombMap& m) { return compose(m.vertices(), m.pi()); }

CombMap dual(const CombMap& m) { return CombMap(face_permutation(m), m.matching()); }

CombMap multiply(const CombMap& s, const CombMap& t) {
  if (!(s.matching() == t.matching()))
    throw std::invalid_argument("multiply: maps have different n-matchings (" +
                                to_string(s.pi()) + " vs " + to_string(t.pi()) + ")");
  return CombMap(compose(s.vertices(), t.vertices()), s.matching());
}

CombMap reverse(const CombMap& m) { return CombMap(inverse(m.vertices()), m.matching()); }

Permutation e_matching(const CombMap& m) { return conjugate(m.pi(), inverse(m.vertices())); }

std::vector<EdgePair> edges(const CombMap& m) { return transposition_pairs(e_matching(m)); }

std::vector<EdgePair> next_edges(const CombMap& m) { return m.matching().pairs(); }

CombMap apply_transposition(Corner a, Corner b, const CombMap& m) {
  if (a == b) throw std::invalid_argument("apply_transposition: corners must differ");
  Permutation p = compose(transposition(a, b, m.order()), m.vertices());
  std::size_t before = cycle_count(m.vertices());
  std::size_t after = cycle_count(p);
  if (after + 1 != before && before + 1 != after)
    throw std::logic_error("apply_transposition: vertex count changed by more than one");
  return CombMap(std::move(p), m.matching());
}

std::vector<CombMap> build_from_transpositions(std::span<const Transposition> ts,
                                               const NextEdgeMatching& pi) {
  std::vector<CombMap> chain;
  chain.reserve(ts.size() + 1);
  chain.push_back(identity_map(pi));
  for (const auto& [a, b] : ts) chain.push_back(apply_transposition(a, b, chain.back()));
  return chain;
}

std::vector<Transposition> generating_transpositions(const Permutation& p) {
  std::vector<Transposition> product;
  for (const Cycle& cycle : cycles(p).cycles) {
    auto part = cycle_to_transpositions(cycle);
    product.insert(product.end(), part.begin(), part.end());
  }
  // product composes left to right to P; the chain multiplies on the left.
  std::reverse(product.begin(), product.end());
  return product;
}

}  // namespace rotmaps
