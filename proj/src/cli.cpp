#include "rotmaps/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "rotmaps/classes.hpp"
#include "rotmaps/comb_map.hpp"
#include "rotmaps/graph_view.hpp"
#include "rotmaps/iso.hpp"
#include "rotmaps/knot.hpp"
#include "rotmaps/map_io.hpp"
#include "rotmaps/permutation.hpp"
#include "rotmaps/verify.hpp"

namespace rotmaps::cli {

namespace {

constexpr std::size_t kForcedBound = 5;

struct MapInput {
  std::string p;
  std::string pi;
  std::string file;
};

struct Options {
  MapInput first;
  MapInput second;
  std::optional<std::size_t> m;
  std::uint64_t seed = kDefaultSeed;
  std::string format = "text";
  std::string graph;
  bool force = false;
};

// Largest integer mentioned in a cycle string; the order of a matching that
// covers every corner.
std::size_t largest_corner(const std::string& text) {
  std::size_t best = 0, value = 0;
  bool in_number = false;
  for (char ch : text) {
    if (ch >= '0' && ch <= '9') {
      value = value * 10 + static_cast<std::size_t>(ch - '0');
      in_number = true;
    } else {
      if (in_number) best = std::max(best, value);
      value = 0;
      in_number = false;
    }
  }
  if (in_number) best = std::max(best, value);
  return best;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read map file '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

std::size_t order_of(const Options& opt, const std::string& pi_text) {
  if (opt.m) {
    if (*opt.m < 1) throw std::invalid_argument("--m must be at least 1");
    return 2 * *opt.m;
  }
  if (!pi_text.empty()) return largest_corner(pi_text);
  throw std::invalid_argument("the number of edges is unknown: pass --m or --pi");
}

CombMap resolve_map(const Options& opt, const MapInput& in, const std::string& default_pi,
                    const char* label) {
  if (!in.file.empty()) {
    if (!in.p.empty()) throw std::invalid_argument(std::string(label) + ": give a file or --p, not both");
    return map_from_json(read_file(in.file));
  }
  const std::string& pi_text = in.pi.empty() ? default_pi : in.pi;
  std::size_t n = order_of(opt, pi_text);
  if (n % 2 != 0) throw std::invalid_argument("map order must be even, got " + std::to_string(n));
  Permutation pi = pi_text.empty() ? normal_matching(n / 2).perm() : parse_cycles(pi_text, n);
  return make_map(parse_cycles(in.p, n), std::move(pi));
}

CombMap first_map(const Options& opt) { return resolve_map(opt, opt.first, "", "first map"); }

CombMap second_map(const Options& opt) {
  if (opt.second.file.empty() && opt.second.p.empty())
    throw std::invalid_argument("second map missing: pass --p2 or --map2");
  return resolve_map(opt, opt.second, opt.first.pi, "second map");
}

std::size_t required_m(const Options& opt) {
  if (!opt.m) throw std::invalid_argument("--m is required");
  if (*opt.m < 1) throw std::invalid_argument("--m must be at least 1");
  return *opt.m;
}

std::size_t enumeration_bound(const Options& opt, std::ostream& err) {
  if (!opt.force) return kDefaultEnumerationBound;
  if (opt.m && *opt.m > kDefaultEnumerationBound)
    err << "warning: m=" << *opt.m << " enumerates " << factorial(2 * *opt.m)
        << " permutations and may take a while\n";
  return kForcedBound;
}

bool lines_format(const Options& opt) {
  if (opt.format == "lines") return true;
  if (opt.format == "text") return false;
  throw std::invalid_argument("--format must be text or lines");
}

std::string pairs_text(const std::vector<EdgePair>& pairs) {
  std::string s;
  for (const auto& e : pairs) {
    if (!s.empty()) s += ' ';
    s += '{' + std::to_string(e.first) + ',' + std::to_string(e.second) + '}';
  }
  return s;
}

void print_knot(const Knot& k, bool lines, std::ostream& out) {
  out << "mu=" << to_string(k.mu) << '\n';
  if (lines) {
    for (Corner c = 1; c <= k.coloring.order(); ++c) out << c << '\t' << to_string(k.coloring(c)) << '\n';
    return;
  }
  std::size_t width = std::to_string(k.coloring.order()).size();
  width = std::max<std::size_t>(width, 2);
  out << "corner";
  for (Corner c = 1; c <= k.coloring.order(); ++c) out << ' ' << std::setw(static_cast<int>(width)) << c;
  out << "\ncolor ";
  for (Corner c = 1; c <= k.coloring.order(); ++c)
    out << ' ' << std::setw(static_cast<int>(width)) << to_string(k.coloring(c));
  out << '\n';
}

std::string flips_text(const std::vector<bool>& flips) {
  std::string s;
  for (bool f : flips) s += f ? '1' : '0';
  return s;
}

int cmd_mul(const Options& opt, std::ostream& out) {
  out << map_to_json(multiply(first_map(opt), second_map(opt))) << '\n';
  return kOk;
}

int cmd_dual(const Options& opt, std::ostream& out) {
  out << map_to_json(dual(first_map(opt))) << '\n';
  return kOk;
}

int cmd_reverse(const Options& opt, std::ostream& out) {
  out << map_to_json(reverse(first_map(opt))) << '\n';
  return kOk;
}

int cmd_ematching(const Options& opt, std::ostream& out) {
  out << "rho=" << to_string(e_matching(first_map(opt))) << '\n';
  return kOk;
}

int cmd_edges(const Options& opt, std::ostream& out) {
  CombMap map = first_map(opt);
  if (lines_format(opt)) {
    for (const auto& e : edges(map)) out << "edge\t" << e.first << '\t' << e.second << '\n';
    for (const auto& e : next_edges(map)) out << "next\t" << e.first << '\t' << e.second << '\n';
    return kOk;
  }
  out << "edges=" << pairs_text(edges(map)) << '\n';
  out << "next_edges=" << pairs_text(next_edges(map)) << '\n';
  return kOk;
}

int cmd_knot(const Options& opt, std::ostream& out) {
  print_knot(knot_of(first_map(opt)), lines_format(opt), out);
  return kOk;
}

int cmd_decompose(const Options& opt, std::ostream& out) {
  Decomposition d = decompose(first_map(opt));
  out << "mu=" << to_string(d.knot.mu) << '\n';
  out << "A=" << to_string(d.selfconjugate.vertices()) << '\n';
  out << "selfconjugate=" << (is_selfconjugate(d.selfconjugate) ? "true" : "false") << '\n';
  return kOk;
}

int cmd_selfconj(const Options& opt, std::ostream& out, std::ostream& err) {
  if (!opt.first.p.empty() || !opt.first.file.empty()) {
    CombMap map = first_map(opt);
    bool self = is_selfconjugate(map);
    out << "selfconjugate=" << (self ? "true" : "false") << '\n';
    if (self) {
      SignedPermutation sp = encode_signed(map);
      out << "pair_perm=" << to_string(sp.pair_perm) << " flips=" << flips_text(sp.flips) << '\n';
    }
    return kOk;
  }
  std::size_t m = required_m(opt);
  NextEdgeMatching pi =
      opt.first.pi.empty() ? normal_matching(m) : NextEdgeMatching(parse_cycles(opt.first.pi, 2 * m));
  auto group = enumerate_selfconjugate(pi, enumeration_bound(opt, err));
  for (const auto& s : group) out << to_string(s.vertices()) << '\n';
  out << "count=" << group.size() << '\n';
  return kOk;
}

int cmd_census(const Options& opt, std::ostream& out, std::ostream& err) {
  std::size_t m = required_m(opt);
  bool lines = lines_format(opt);
  auto table = census(m, enumeration_bound(opt, err));
  std::uint64_t total = 0;
  for (const auto& e : table) total += e.count;
  if (lines) {
    for (const auto& e : table) out << to_string(e.rho) << '\t' << e.count << '\n';
    return kOk;
  }
  std::size_t width = 3;
  for (const auto& e : table) width = std::max(width, to_string(e.rho).size());
  out << std::left << std::setw(static_cast<int>(width)) << "rho" << "  count\n";
  for (const auto& e : table)
    out << std::left << std::setw(static_cast<int>(width)) << to_string(e.rho) << "  " << e.count
        << '\n';
  out << "classes=" << table.size() << " total=" << total << '\n';
  return kOk;
}

int cmd_counts(const Options& opt, std::ostream& out) {
  std::size_t m = required_m(opt);
  const auto classes = class_count(m);
  const auto size = class_size(m);
  const auto total = factorial(2 * m);
  out << "classes=" << classes << " size=" << size << " total=" << total << '\n';
  return kOk;
}

int cmd_iso(const Options& opt, std::ostream& out) {
  CombMap a = first_map(opt);
  CombMap b = second_map(opt);
  auto witness = are_isomorphic(a, b);
  if (!witness) {
    out << "not isomorphic\n";
    return kNegative;
  }
  out << "isomorphic witness=" << to_string(witness->a) << '\n';
  out << "same_class=" << (same_class_criterion(a, b, *witness) ? "true" : "false") << '\n';
  return kOk;
}

int cmd_view(const Options& opt, std::ostream& out) {
  CombMap map = first_map(opt);
  if (!opt.graph.empty()) {
    out << export_graph(map, parse_graph_format(opt.graph));
    return kOk;
  }
  GraphView g = view(map);
  auto summary = summarize(g);
  out << "V=" << g.vertices.cycles.size() << " E=" << g.edge_pairs.size()
      << " F=" << g.faces.cycles.size() << " components=" << g.components.size() << '\n';
  out << "vertices=" << to_string(map.vertices()) << '\n';
  out << "faces=" << to_string(face_permutation(map)) << '\n';
  out << "edges=" << pairs_text(g.edge_pairs) << '\n';
  for (std::size_t k = 0; k < summary.size(); ++k) {
    out << "component " << k + 1 << ": corners=";
    for (std::size_t i = 0; i < g.components[k].size(); ++i)
      out << (i ? "," : "") << g.components[k][i];
    out << " V=" << summary[k].vertices << " E=" << summary[k].edges << " F=" << summary[k].faces
        << " chi=" << summary[k].euler_characteristic << " genus=" << summary[k].genus << '\n';
  }
  return kOk;
}

int cmd_verify(const Options& opt, std::ostream& out, std::ostream& err) {
  std::size_t m = required_m(opt);
  auto results = verify_theorems(m, opt.seed, enumeration_bound(opt, err));
  bool all = true;
  for (const auto& r : results) {
    out << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail << '\n';
    all = all && r.passed;
  }
  out << (all ? "all checks passed" : "some checks failed") << " (m=" << m << ", seed=" << opt.seed
      << ")\n";
  return all ? kOk : kNegative;
}

void add_map_options(CLI::App* sub, Options& opt, bool two_maps) {
  sub->add_option("--p", opt.first.p, "vertex rotation in cycle notation");
  sub->add_option("--pi", opt.first.pi, "n-matching in cycle notation (default: normal)");
  sub->add_option("--map", opt.first.file, "map file {\"n\":..,\"p\":..,\"pi\":..}");
  sub->add_option("--m", opt.m, "number of edges (corners = 2m)");
  if (two_maps) {
    sub->add_option("--p2", opt.second.p, "second map's vertex rotation");
    sub->add_option("--pi2", opt.second.pi, "second map's n-matching (default: --pi)");
    sub->add_option("--map2", opt.second.file, "second map file");
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"rotmaps: combinatorial maps as permutation pairs", "rotmaps"};
  app.require_subcommand(1, 1);
  Options opt;

  struct Entry {
    const char* name;
    const char* help;
    bool two_maps;
  };
  const Entry entries[] = {
      {"mul", "multiply two maps over the same n-matching", true},
      {"dual", "dual map (Q, P)", false},
      {"reverse", "reversed map (P^-1, pi)", false},
      {"ematching", "edge matching rho = P*pi*P^-1", false},
      {"edges", "edge and next-edge pairs", false},
      {"knot", "canonical knot and its well coloring", false},
      {"decompose", "split a map into knot times selfconjugate map", false},
      {"selfconj", "test one map, or list K_pi for --m", false},
      {"census", "bucket all maps of order 2m by e-matching", false},
      {"counts", "class count, class size and total for --m", false},
      {"iso", "search for an isomorphism witness", true},
      {"view", "vertices, faces, edges and genus per component", false},
      {"verify", "check the counting and structure theorems at --m", false},
  };
  for (const auto& e : entries) {
    CLI::App* sub = app.add_subcommand(e.name, e.help);
    add_map_options(sub, opt, e.two_maps);
    sub->add_option("--seed", opt.seed, "seed for sampled checks");
    sub->add_option("--format", opt.format, "text or lines")->check(CLI::IsMember({"text", "lines"}));
    sub->add_flag("--force", opt.force, "raise the enumeration bound to m=5");
    if (std::string(e.name) == "view")
      sub->add_option("--graph", opt.graph, "export as edge-list or dot");
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kBadInput;
  }

  const std::string name = app.get_subcommands().front()->get_name();
  try {
    if (name == "mul") return cmd_mul(opt, out);
    if (name == "dual") return cmd_dual(opt, out);
    if (name == "reverse") return cmd_reverse(opt, out);
    if (name == "ematching") return cmd_ematching(opt, out);
    if (name == "edges") return cmd_edges(opt, out);
    if (name == "knot") return cmd_knot(opt, out);
    if (name == "decompose") return cmd_decompose(opt, out);
    if (name == "selfconj") return cmd_selfconj(opt, out, err);
    if (name == "census") return cmd_census(opt, out, err);
    if (name == "counts") return cmd_counts(opt, out);
    if (name == "iso") return cmd_iso(opt, out);
    if (name == "view") return cmd_view(opt, out);
    if (name == "verify") return cmd_verify(opt, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  }
  err << "error: unknown subcommand " << name << '\n';
  return kBadInput;
}

}  // namespace rotmaps::cli
