#pragma once

#include <cstddef>
#include <vector>

#include "snsim/graph.hpp"

namespace snsim {

// How the per-feature difference term enters the feature score. literal
// applies |f_i - f_j|^tau directly, so a positive preference sign rewards
// feature DIFFERENCE; similarity substitutes (1 - |f_i - f_j|^tau) so a
// positive sign rewards sameness. literal is the default.
enum class FeatureMode { literal, similarity };

// Weights and knobs for pair attachment scoring. gamma[k] is the path
// preference for shortest-path length k + 2; path lengths beyond
// max_path_length contribute nothing.
struct ScoringParams {
  double feature_weight = 1.0;     // q
  double popularity_weight = 1.0;  // r
  double path_weight = 1.0;        // c
  double attachment_factor = 1.0;  // m
  double tau = 1.0;                // exponent on |f_i - f_j|
  std::vector<double> gamma = {0.5, 0.5};
  std::size_t max_path_length = 3;
  FeatureMode feature_mode = FeatureMode::literal;

  void validate() const;
};

// Feature-based score: sum over features of the difference term times each
// endpoint's signed preference weight. Zero when F = 0.
double feature_score(const AttributedNetwork& net, NodeId i, NodeId j,
                     const ScoringParams& params);

// Popularity-based score: m * (deg(i) + deg(j)).
double popularity_score(const AttributedNetwork& net, NodeId i, NodeId j,
                        const ScoringParams& params);

// Shortest-path score: 2 * gamma[d-2]^d when the current shortest path
// between i and j has length d in [2, max_path_length], else 0. Evaluated on
// the graph as-is (the candidate edge itself is absent by construction).
double path_score(const AttributedNetwork& net, NodeId i, NodeId j,
                  const ScoringParams& params);

// q * feature + r * popularity + c * path.
double pair_score(const AttributedNetwork& net, NodeId i, NodeId j,
                  const ScoringParams& params);

struct ScoredPair {
  NodeId i;
  NodeId j;
  double score;
};

// The k unconnected pairs with the highest pair_score, ordered by score
// descending then (i, j) ascending; returns all unconnected pairs when fewer
// than k exist. Deterministic: ties never depend on evaluation order.
std::vector<ScoredPair> rank_unconnected_pairs(const AttributedNetwork& net,
                                               const ScoringParams& params,
                                               std::size_t k);

}  // namespace snsim
