#include "snsim/graph.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "snsim/errors.hpp"

namespace snsim {

void NodeAttributes::validate() const {
  const std::size_t f = features.size();
  if (preference_signs.size() != f || preference_weights.size() != f) {
    throw ValidationError("attribute vectors disagree in length: " +
                          std::to_string(f) + " features, " +
                          std::to_string(preference_signs.size()) + " signs, " +
                          std::to_string(preference_weights.size()) +
                          " weights");
  }
  for (double v : features) {
    if (!std::isfinite(v) || v < 0.0 || v > 1.0) {
      throw ValidationError("feature value " + std::to_string(v) +
                            " outside [0,1]");
    }
  }
  for (int s : preference_signs) {
    if (s != -1 && s != 1) {
      throw ValidationError("preference sign " + std::to_string(s) +
                            " is not -1 or +1");
    }
  }
  for (double w : preference_weights) {
    if (!std::isfinite(w) || w < 0.0 || w > 1.0) {
      throw ValidationError("preference weight " + std::to_string(w) +
                            " outside [0,1]");
    }
  }
}

NodeAttributes NodeAttributes::from_features(std::vector<double> features) {
  NodeAttributes a;
  a.preference_signs.assign(features.size(), 1);
  a.preference_weights.assign(features.size(), 1.0);
  a.features = std::move(features);
  return a;
}

AttributedNetwork::AttributedNetwork(std::size_t node_count)
    : adjacency_(node_count), attributes_(node_count) {}

AttributedNetwork::AttributedNetwork(std::vector<NodeAttributes> attributes)
    : adjacency_(attributes.size()), attributes_(std::move(attributes)) {
  if (!attributes_.empty()) {
    feature_count_ = attributes_[0].feature_count();
  }
  for (std::size_t i = 0; i < attributes_.size(); ++i) {
    attributes_[i].validate();
    if (attributes_[i].feature_count() != feature_count_) {
      throw ValidationError("node " + std::to_string(i) + " has " +
                            std::to_string(attributes_[i].feature_count()) +
                            " features, expected " +
                            std::to_string(feature_count_));
    }
  }
}

std::size_t AttributedNetwork::max_edge_count() const {
  const std::size_t n = node_count();
  return n * (n - 1) / 2;
}

void AttributedNetwork::require_node(NodeId i) const {
  if (i >= node_count()) {
    throw ValidationError("node id " + std::to_string(i) +
                          " out of range [0," + std::to_string(node_count()) +
                          ")");
  }
}

bool AttributedNetwork::has_edge(NodeId i, NodeId j) const {
  require_node(i);
  require_node(j);
  const auto& a = adjacency_[i];
  return std::binary_search(a.begin(), a.end(), j);
}

void AttributedNetwork::add_edge(NodeId i, NodeId j) {
  require_node(i);
  require_node(j);
  if (i == j) {
    throw ValidationError("self-loop rejected at node " + std::to_string(i));
  }
  auto& ai = adjacency_[i];
  auto pos = std::lower_bound(ai.begin(), ai.end(), j);
  if (pos != ai.end() && *pos == j) {
    throw ValidationError("edge (" + std::to_string(i) + "," +
                          std::to_string(j) + ") already present");
  }
  ai.insert(pos, j);
  auto& aj = adjacency_[j];
  aj.insert(std::lower_bound(aj.begin(), aj.end(), i), i);
  ++edge_count_;
}

std::size_t AttributedNetwork::degree(NodeId i) const {
  require_node(i);
  return adjacency_[i].size();
}

const std::vector<NodeId>& AttributedNetwork::neighbors(NodeId i) const {
  require_node(i);
  return adjacency_[i];
}

std::vector<std::pair<NodeId, NodeId>> AttributedNetwork::edges() const {
  std::vector<std::pair<NodeId, NodeId>> out;
  out.reserve(edge_count_);
  for (NodeId i = 0; i < node_count(); ++i) {
    for (NodeId j : adjacency_[i]) {
      if (j > i) out.emplace_back(i, j);
    }
  }
  return out;
}

const NodeAttributes& AttributedNetwork::attributes(NodeId i) const {
  require_node(i);
  return attributes_[i];
}

void AttributedNetwork::bfs_into(NodeId source, std::vector<std::int32_t>& out,
                                 std::int32_t depth_limit) const {
  require_node(source);
  out.assign(node_count(), -1);
  out[source] = 0;
  std::vector<NodeId> frontier{source};
  std::vector<NodeId> next;
  std::int32_t depth = 0;
  while (!frontier.empty()) {
    if (depth_limit >= 0 && depth == depth_limit) break;
    ++depth;
    next.clear();
    for (NodeId u : frontier) {
      for (NodeId v : adjacency_[u]) {
        if (out[v] < 0) {
          out[v] = depth;
          next.push_back(v);
        }
      }
    }
    frontier.swap(next);
  }
}

std::vector<std::optional<std::uint32_t>> AttributedNetwork::bfs_distances(
    NodeId source) const {
  std::vector<std::int32_t> raw;
  bfs_into(source, raw);
  std::vector<std::optional<std::uint32_t>> out(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (raw[i] >= 0) out[i] = static_cast<std::uint32_t>(raw[i]);
  }
  return out;
}

}  // namespace snsim
