#include "rotmaps/map_io.hpp"

#include <stdexcept>

#include <json.hpp>

namespace rotmaps {

std::string map_to_json(const CombMap& m) {
  nlohmann::ordered_json doc;
  doc["n"] = m.order();
  doc["p"] = to_string(m.vertices());
  doc["pi"] = to_string(m.pi());
  return doc.dump();
}

CombMap map_from_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("map document: ") + e.what());
  }
  if (!doc.is_object()) throw std::invalid_argument("map document: expected an object");
  auto n_it = doc.find("n");
  auto p_it = doc.find("p");
  auto pi_it = doc.find("pi");
  if (n_it == doc.end() || !n_it->is_number_unsigned())
    throw std::invalid_argument("map document: \"n\" must be a non-negative integer");
  if (p_it == doc.end() || !p_it->is_string())
    throw std::invalid_argument("map document: \"p\" must be a cycle string");
  auto n = n_it->get<std::size_t>();
  Permutation pi = [&] {
    if (pi_it == doc.end()) {
      if (n % 2 != 0 || n == 0) throw std::invalid_argument("map document: \"n\" must be even");
      return normal_matching(n / 2).perm();
    }
    if (!pi_it->is_string()) throw std::invalid_argument("map document: \"pi\" must be a cycle string");
    return parse_cycles(pi_it->get<std::string>(), n);
  }();
  return make_map(parse_cycles(p_it->get<std::string>(), n), std::move(pi));
}

}  // namespace rotmaps
