#pragma once

#include <cstdint>
#include <vector>

#include "snsim/graph.hpp"
#include "snsim/scoring.hpp"

namespace snsim {

// Configuration of one growth run. The node set and feature setup come from
// initial_attributes; the seed is recorded for provenance (the growth itself
// is fully deterministic, randomness only enters upstream feature synthesis).
struct SimulationConfig {
  std::size_t iterations = 8;
  double edge_rate = 0.04;  // fraction of all N(N-1)/2 pairs added per step
  ScoringParams scoring;
  std::uint64_t seed = 0;
  std::vector<NodeAttributes> initial_attributes;
  bool stop_at_saturation = false;

  std::size_t node_count() const { return initial_attributes.size(); }
  void validate() const;
};

// State of the network after one growth iteration. elapsed_cost counts
// pair-score evaluations since the start of the run (the deterministic
// efficiency proxy); elapsed_wall is informational only and excluded from
// every reproducibility comparison.
struct Snapshot {
  std::size_t iteration = 0;  // 1-based
  AttributedNetwork network;
  std::uint64_t elapsed_cost = 0;
  double elapsed_wall = 0.0;
  bool saturated = false;
};

struct GrowthTrace {
  std::vector<Snapshot> snapshots;
  SimulationConfig config;
};

// max(1, round-half-up(rate * n(n-1)/2)). Throws ValidationError for n < 2
// or rate outside (0, 1].
std::size_t edges_per_iteration(std::size_t n, double rate);

// Owns the growing network; step() adds the top-ranked unconnected pairs and
// returns a frozen snapshot.
class Simulator {
 public:
  explicit Simulator(SimulationConfig config);
  Simulator(SimulationConfig config, AttributedNetwork start);

  const AttributedNetwork& network() const { return state_; }

  Snapshot step();
  GrowthTrace run();

 private:
  SimulationConfig config_;
  AttributedNetwork state_;
  std::size_t edges_per_step_;
  std::size_t iteration_ = 0;
  std::uint64_t cost_ = 0;
  double wall_ = 0.0;
};

GrowthTrace run_simulation(const SimulationConfig& config);

}  // namespace snsim
