#include "rotmaps/knot.hpp"

#include <stdexcept>

#include "rotmaps/classes.hpp"

namespace rotmaps {

std::string to_string(Color c) { return c == Color::C1 ? "C1" : "C2"; }

bool is_well_coloring(const WellColoring& coloring, const Permutation& pi,
                      const Permutation& rho) {
  if (coloring.order() != pi.order() || coloring.order() != rho.order()) return false;
  for (Corner c = 1; c <= coloring.order(); ++c) {
    if (coloring(c) == coloring(pi(c))) return false;
    if (coloring(c) == coloring(rho(c))) return false;
  }
  return true;
}

std::vector<Cycle> traversal_cycles(const Permutation& pi, const Permutation& rho) {
  if (pi.order() != rho.order())
    throw std::invalid_argument("traversal_cycles: order mismatch");
  std::vector<Cycle> walks;
  std::vector<bool> visited(pi.order(), false);
  for (Corner start = 1; start <= pi.order(); ++start) {
    if (visited[start - 1]) continue;
    Cycle walk;
    Corner c = start;
    bool by_pi = true;
    while (!visited[c - 1]) {
      visited[c - 1] = true;
      walk.push_back(c);
      c = by_pi ? pi(c) : rho(c);
      by_pi = !by_pi;
    }
    if (c != start || walk.size() % 2 != 0)
      throw std::logic_error("traversal_cycles: walk from " + std::to_string(start) +
                             " did not close after an even number of steps");
    walks.push_back(std::move(walk));
  }
  return walks;
}

WellColoring well_color(const CombMap& m) {
  std::vector<Color> colors(m.order());
  for (const Cycle& walk : traversal_cycles(m.pi(), e_matching(m)))
    for (std::size_t i = 0; i < walk.size(); ++i)
      colors[walk[i] - 1] = i % 2 == 0 ? Color::C1 : Color::C2;
  return WellColoring(std::move(colors));
}

Knot knot_from_coloring(const Permutation& pi, const Permutation& rho, WellColoring coloring) {
  if (!is_well_coloring(coloring, pi, rho))
    throw std::invalid_argument("knot: coloring is not a well coloring");
  std::vector<Corner> images(pi.order());
  for (Corner c = 1; c <= pi.order(); ++c)
    images[c - 1] = coloring(c) == Color::C1 ? pi(c) : rho(c);
  Knot k{Permutation::from_images(std::move(images)), std::move(coloring), pi, rho};
  if (conjugate(k.pi, k.mu) != k.rho)
    throw std::logic_error("knot: pi^mu differs from rho");
  return k;
}

Knot knot_of(const CombMap& m) { return knot_from_coloring(m.pi(), e_matching(m), well_color(m)); }

Knot reverse_knot_cycle(const Knot& k, std::size_t cycle_index) {
  CycleForm form = cycles(k.mu);
  if (cycle_index >= form.cycles.size())
    throw std::out_of_range("reverse_knot_cycle: index " + std::to_string(cycle_index) +
                            " but knot has " + std::to_string(form.cycles.size()) + " cycles");
  std::vector<Color> colors(k.coloring.colors().begin(), k.coloring.colors().end());
  for (Corner c : form.cycles[cycle_index])
    colors[c - 1] = colors[c - 1] == Color::C1 ? Color::C2 : Color::C1;
  Knot reversed = knot_from_coloring(k.pi, k.rho, WellColoring(std::move(colors)));
  return reversed;
}

Decomposition decompose(const CombMap& m) {
  Knot k = knot_of(m);
  CombMap knot_map(k.mu, m.matching());
  CombMap rest(compose(inverse(k.mu), m.vertices()), m.matching());
  if (!is_selfconjugate(rest))
    throw std::logic_error("decompose: cofactor of the knot is not selfconjugate");
  return {std::move(k), std::move(knot_map), std::move(rest)};
}

}  // namespace rotmaps
