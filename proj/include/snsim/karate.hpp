#pragma once

#include <string_view>

#include "snsim/graph_io.hpp"

namespace snsim {

// Bundled Zachary karate club dataset: 34 nodes, 78 edges, one binary
// "club" column (0 = "Mr. Hi", 1 = "Officer"). Node labels are 1-based in
// the raw text and densify to 0..33. The same text ships under data/.
std::string_view karate_edge_text();
std::string_view karate_attribute_text();

LoadedNetwork load_karate();

}  // namespace snsim
