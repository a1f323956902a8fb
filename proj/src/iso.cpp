#include "rotmaps/iso.hpp"

#include <stdexcept>

#include "rotmaps/classes.hpp"

namespace rotmaps {

bool is_witness(const CombMap& m1, const CombMap& m2, const Permutation& a) {
  return a.order() == m1.order() && m1.order() == m2.order() &&
         conjugate(m2.pi(), a) == m1.pi() && conjugate(m2.vertices(), a) == m1.vertices();
}

std::optional<Conjugator> are_isomorphic(const CombMap& m1, const CombMap& m2,
                                         std::size_t max_order) {
  if (m1.order() != m2.order())
    throw std::invalid_argument("are_isomorphic: maps have orders " + std::to_string(m1.order()) +
                                " and " + std::to_string(m2.order()));
  if (m1.order() > max_order)
    throw std::out_of_range("are_isomorphic: order " + std::to_string(m1.order()) +
                            " exceeds search cap " + std::to_string(max_order));

  if (cycle_type(m1.vertices()) != cycle_type(m2.vertices())) return std::nullopt;
  if (cycle_type(face_permutation(m1)) != cycle_type(face_permutation(m2))) return std::nullopt;

  // base carries pair k of pi2 onto pair k of pi1; every A with pi2^A = pi1
  // is C*base for some C commuting with pi2.
  auto from = m2.matching().pairs();
  auto to = m1.matching().pairs();
  std::vector<Corner> images(m1.order());
  for (std::size_t k = 0; k < from.size(); ++k) {
    images[from[k].first - 1] = to[k].first;
    images[from[k].second - 1] = to[k].second;
  }
  const Permutation base = Permutation::from_images(std::move(images));

  auto hit = find_selfconjugate(m2.matching(), [&](const CombMap& c) {
    return conjugate(m2.vertices(), compose(c.vertices(), base)) == m1.vertices();
  });
  if (!hit) return std::nullopt;
  return Conjugator{compose(hit->vertices(), base)};
}

bool same_class_criterion(const CombMap& m1, const CombMap& m2, const Conjugator& a) {
  if (!is_witness(m1, m2, a.a))
    throw std::invalid_argument("same_class_criterion: " + to_string(a.a) +
                                " does not conjugate the second map onto the first");
  return commutes(a.a, m1.pi());
}

}  // namespace rotmaps
