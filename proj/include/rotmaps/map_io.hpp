#pragma once

// Text exchange form of a map: {"n": 2m, "p": "<cycles>", "pi": "<cycles>"}.

#include <string>
#include <string_view>

#include "rotmaps/comb_map.hpp"

namespace rotmaps {

std::string map_to_json(const CombMap& m);

/// Throws std::invalid_argument on malformed documents or invalid maps.
CombMap map_from_json(std::string_view text);

}  // namespace rotmaps
