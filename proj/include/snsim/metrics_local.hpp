#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>

#include "snsim/graph.hpp"
#include "snsim/metrics_global.hpp"
#include "snsim/rng.hpp"

namespace snsim {

// Triangle counts classified by how many of the three members carry the
// binary attribute value 0 — the "Mr. Hi" club in the bundled data, where
// the club column encodes Mr. Hi as 0 and Officer as 1. counts[k] holds the
// number of triangles with exactly k value-0 members.
struct TriadCensus {
  std::array<std::uint64_t, 4> counts{0, 0, 0, 0};

  std::uint64_t total() const {
    return counts[0] + counts[1] + counts[2] + counts[3];
  }
};

// Random-graph ensemble settings for significance scoring. The null model is
// fixed: uniform graphs with the same node and edge count (attributes held
// as-is). Sample s draws its own generator from
// derive_seed(seed, kStreamEnsembleSample, s), so results are independent of
// evaluation order.
struct EnsembleConfig {
  std::size_t samples = 100;
  std::uint64_t seed = 0;

  void validate() const;
};

// Per-node local clustering coefficient; nodes with degree < 2 contribute 0.
Distribution clustering_distribution(const AttributedNetwork& net);

// labels[i] must be exactly 0.0 or 1.0 and cover every node.
TriadCensus triad_census(const AttributedNetwork& net,
                         std::span<const double> labels);

// Convenience overload classifying by the network's own first feature.
TriadCensus triad_census(const AttributedNetwork& net);

// Uniform random graph with n nodes and m edges.
AttributedNetwork sample_gnm(std::size_t n, std::size_t m, Rng& rng);

// Z-score of each census type against the seeded random ensemble. A zero
// ensemble deviation yields Z = 0 when the observed count equals the
// ensemble mean and a capped Z = sign * 10 otherwise.
std::array<std::optional<double>, 4> triad_zscores(
    const AttributedNetwork& net, std::span<const double> labels,
    const EnsembleConfig& ensemble);

// Unit-normalized profile SP_i = Z_i / sqrt(sum Z_j^2) over present entries;
// all entries become missing when every present Z is zero.
std::array<std::optional<double>, 4> significance_profile(
    const std::array<std::optional<double>, 4>& z);

}  // namespace snsim
