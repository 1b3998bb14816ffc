#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace snsim {

// Dense, stable node index in [0, N).
using NodeId = std::uint32_t;

// Per-node attribute tuple: a feature vector plus the node's preference data
// (one sign and one weight per feature). All three vectors share length F.
struct NodeAttributes {
  std::vector<double> features;           // each value in [0, 1]
  std::vector<int> preference_signs;      // -1 (avoid similar) or +1 (prefer)
  std::vector<double> preference_weights; // each value in [0, 1]

  std::size_t feature_count() const { return features.size(); }

  // Throws ValidationError on length mismatch or out-of-domain values.
  void validate() const;

  static NodeAttributes from_features(std::vector<double> features);
};

// Undirected graph over a fixed node set with per-node attributes.
// Nodes are never added or removed after construction; edges only grow.
class AttributedNetwork {
 public:
  AttributedNetwork() = default;  // empty network

  // N isolated nodes with empty (F = 0) attributes.
  explicit AttributedNetwork(std::size_t node_count);

  // One NodeAttributes per node; all must have the same feature count.
  explicit AttributedNetwork(std::vector<NodeAttributes> attributes);

  std::size_t node_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edge_count_; }
  std::size_t feature_count() const { return feature_count_; }

  // N(N-1)/2.
  std::size_t max_edge_count() const;
  bool saturated() const { return edge_count_ == max_edge_count(); }

  bool has_edge(NodeId i, NodeId j) const;

  // Inserts the undirected edge {i, j}. Throws ValidationError on a
  // self-loop, an out-of-range id, or an already-present edge.
  void add_edge(NodeId i, NodeId j);

  std::size_t degree(NodeId i) const;

  // Neighbor ids in ascending order.
  const std::vector<NodeId>& neighbors(NodeId i) const;

  // All edges as (i, j) with i < j, in lexicographic order.
  std::vector<std::pair<NodeId, NodeId>> edges() const;

  const NodeAttributes& attributes(NodeId i) const;

  // BFS hop counts from source; nullopt marks unreachable nodes.
  std::vector<std::optional<std::uint32_t>> bfs_distances(NodeId source) const;

  // BFS into a reusable buffer, -1 marking unreachable. Nodes farther than
  // depth_limit are left unreachable when depth_limit >= 0.
  void bfs_into(NodeId source, std::vector<std::int32_t>& out,
                std::int32_t depth_limit = -1) const;

  void require_node(NodeId i) const;

 private:
  std::vector<std::vector<NodeId>> adjacency_;
  std::vector<NodeAttributes> attributes_;
  std::size_t edge_count_ = 0;
  std::size_t feature_count_ = 0;
};

}  // namespace snsim
