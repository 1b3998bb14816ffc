#pragma once

#include <optional>
#include <vector>

#include "snsim/graph.hpp"

namespace snsim {

struct DistributionSummary {
  double mean = 0.0;
  double stddev = 0.0;  // population convention (divisor n)
  double q25 = 0.0;     // linear-interpolation quantiles
  double q75 = 0.0;
  double min = 0.0;
  double max = 0.0;
};

struct Distribution {
  std::vector<double> samples;
  DistributionSummary summary;
};

Distribution make_distribution(std::vector<double> samples);

// |E| / (N(N-1)/2); requires N >= 2.
double density(const AttributedNetwork& net);

struct ModularityResult {
  double value = 0.0;
  std::vector<int> community;  // community id per node
};

// Newman modularity of the partition found by greedy agglomerative merging
// (largest modularity gain first, ties broken by the lexicographically
// smallest community pair, stop when no merge gains). nullopt on zero edges.
std::optional<ModularityResult> modularity(const AttributedNetwork& net);

// Newman's Q of an arbitrary partition; used by modularity() internally and
// exposed for verification.
double partition_modularity(const AttributedNetwork& net,
                            const std::vector<int>& community);

// Pearson correlation of endpoint degrees over the symmetrized edge list
// (each edge contributes both orderings). nullopt on zero edges or when the
// endpoint degrees carry no variance.
std::optional<double> degree_assortativity(const AttributedNetwork& net);

// One sample per node.
Distribution degree_distribution(const AttributedNetwork& net);

// One sample per unordered node pair; unreachable pairs take the cap N.
// Requires N >= 2.
Distribution shortest_path_distribution(const AttributedNetwork& net);

}  // namespace snsim
