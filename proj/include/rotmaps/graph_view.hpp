#pragma once

// Graph reading of a map: cycles of P are vertices, cycles of P*pi are
// faces, rho-pairs are edges, and components are orbits of <P, rho>.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "rotmaps/comb_map.hpp"

namespace rotmaps {

struct GraphView {
  CycleForm vertices;
  CycleForm faces;
  std::vector<EdgePair> edge_pairs;
  /// Sorted corner sets, ordered by their smallest corner.
  std::vector<std::vector<Corner>> components;
};

GraphView view(const CombMap& m);

struct ComponentSummary {
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t faces = 0;
  long euler_characteristic = 0;  // V - E + F
  long genus = 0;                 // (2 - chi) / 2
};

/// One entry per component, in the order of view(m).components. Throws
/// std::logic_error if some chi is odd or above 2.
std::vector<ComponentSummary> summarize(const GraphView& g);

std::vector<long> euler_characteristic(const CombMap& m);
std::vector<long> genus(const CombMap& m);

enum class GraphFormat { EdgeList, Dot };

/// Accepts "edge-list" and "dot"; throws std::invalid_argument otherwise.
GraphFormat parse_graph_format(std::string_view name);

/// Vertices are labelled v1..vV by vertex-cycle index; one edge per rho-pair
/// joining the vertices holding its two corners (loops allowed).
std::string export_graph(const CombMap& m, GraphFormat format);

}  // namespace rotmaps
