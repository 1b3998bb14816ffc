#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "snsim/graph.hpp"

namespace snsim {

// A parsed network together with the label mapping used to densify ids:
// labels[k] is the original label of dense node k.
struct LoadedNetwork {
  AttributedNetwork network;
  std::vector<std::string> labels;
};

// Parses an edge list ("i j" or "i,j" per line, '#' comments) and an optional
// attribute table (CSV, header "node,f1[,f2,...]"). Node labels may be
// arbitrary tokens; they are remapped to dense 0-based ids, numerically when
// every label is an integer and lexicographically otherwise. When the table
// is present it must cover every node referenced by an edge; extra rows add
// isolated nodes. Preference signs/weights default to +1/1.0 and are set
// later from simulation configs.
LoadedNetwork load_network(std::string_view edge_list_text,
                           std::optional<std::string_view> attribute_csv =
                               std::nullopt);

// Canonical text forms using dense ids; load_network(serialize_*) round-trips
// node count, edges and features.
std::string serialize_edge_list(const AttributedNetwork& net);
std::string serialize_attribute_csv(const AttributedNetwork& net);

// Shortest-round-trip decimal rendering (locale independent).
std::string format_double(double v);

std::string read_text_file(const std::string& path);

}  // namespace snsim
