#include "rotmaps/graph_view.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace rotmaps {

namespace {

// Union-find over corners.
class Components {
 public:
  explicit Components(std::size_t n) : parent_(n + 1) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t c) {
    while (parent_[c] != c) c = parent_[c] = parent_[parent_[c]];
    return c;
  }

  void join(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

// Component index of every corner.
std::vector<std::size_t> component_of(const GraphView& g, std::size_t n) {
  std::vector<std::size_t> index(n + 1, 0);
  for (std::size_t k = 0; k < g.components.size(); ++k)
    for (Corner c : g.components[k]) index[c] = k;
  return index;
}

std::vector<std::size_t> vertex_of(const GraphView& g, std::size_t n) {
  std::vector<std::size_t> index(n + 1, 0);
  for (std::size_t v = 0; v < g.vertices.cycles.size(); ++v)
    for (Corner c : g.vertices.cycles[v]) index[c] = v + 1;
  return index;
}

}  // namespace

GraphView view(const CombMap& m) {
  GraphView g{cycles(m.vertices()), cycles(face_permutation(m)), edges(m), {}};
  const std::size_t n = m.order();
  Components uf(n);
  for (Corner c = 1; c <= n; ++c) uf.join(c, m.vertices()(c));
  for (const EdgePair& e : g.edge_pairs) uf.join(e.first, e.second);
  std::vector<std::size_t> slot(n + 1, SIZE_MAX);
  for (Corner c = 1; c <= n; ++c) {
    std::size_t root = uf.find(c);
    if (slot[root] == SIZE_MAX) {
      slot[root] = g.components.size();
      g.components.emplace_back();
    }
    g.components[slot[root]].push_back(c);
  }
  return g;
}

std::vector<ComponentSummary> summarize(const GraphView& g) {
  std::size_t n = 0;
  for (const auto& comp : g.components) n += comp.size();
  auto comp = component_of(g, n);
  std::vector<ComponentSummary> out(g.components.size());
  for (const Cycle& v : g.vertices.cycles) ++out[comp[v.front()]].vertices;
  for (const Cycle& f : g.faces.cycles) ++out[comp[f.front()]].faces;
  for (const EdgePair& e : g.edge_pairs) ++out[comp[e.first]].edges;
  for (auto& s : out) {
    s.euler_characteristic = static_cast<long>(s.vertices) - static_cast<long>(s.edges) +
                             static_cast<long>(s.faces);
    if (s.euler_characteristic > 2 || s.euler_characteristic % 2 != 0)
      throw std::logic_error("component with Euler characteristic " +
                             std::to_string(s.euler_characteristic));
    s.genus = (2 - s.euler_characteristic) / 2;
  }
  return out;
}

std::vector<long> euler_characteristic(const CombMap& m) {
  std::vector<long> out;
  for (const auto& s : summarize(view(m))) out.push_back(s.euler_characteristic);
  return out;
}

std::vector<long> genus(const CombMap& m) {
  std::vector<long> out;
  for (const auto& s : summarize(view(m))) out.push_back(s.genus);
  return out;
}

GraphFormat parse_graph_format(std::string_view name) {
  if (name == "edge-list") return GraphFormat::EdgeList;
  if (name == "dot") return GraphFormat::Dot;
  throw std::invalid_argument("unknown graph format '" + std::string(name) +
                              "' (expected edge-list or dot)");
}

std::string export_graph(const CombMap& m, GraphFormat format) {
  GraphView g = view(m);
  auto summary = summarize(g);
  auto vertex = vertex_of(g, m.order());
  std::ostringstream out;

  auto edge_ends = [&](const EdgePair& e) {
    std::size_t a = vertex[e.first];
    std::size_t b = vertex[e.second];
    return std::pair{std::min(a, b), std::max(a, b)};
  };

  if (format == GraphFormat::EdgeList) {
    out << "# V=" << g.vertices.cycles.size() << " E=" << g.edge_pairs.size()
        << " F=" << g.faces.cycles.size() << " components=" << g.components.size() << '\n';
    for (std::size_t k = 0; k < summary.size(); ++k)
      out << "# component " << k + 1 << ": V=" << summary[k].vertices
          << " E=" << summary[k].edges << " F=" << summary[k].faces
          << " chi=" << summary[k].euler_characteristic << " genus=" << summary[k].genus << '\n';
    for (const EdgePair& e : g.edge_pairs) {
      auto [a, b] = edge_ends(e);
      out << 'v' << a << " v" << b << '\n';
    }
    return out.str();
  }

  out << "graph map {\n";
  for (std::size_t v = 0; v < g.vertices.cycles.size(); ++v) {
    out << "  v" << v + 1 << " [label=\"";
    const Cycle& cycle = g.vertices.cycles[v];
    for (std::size_t i = 0; i < cycle.size(); ++i) out << (i ? " " : "") << cycle[i];
    out << "\"];\n";
  }
  for (const EdgePair& e : g.edge_pairs) {
    auto [a, b] = edge_ends(e);
    out << "  v" << a << " -- v" << b << " [label=\"" << e.first << "," << e.second << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace rotmaps
