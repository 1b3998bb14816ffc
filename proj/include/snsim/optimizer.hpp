#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "snsim/assessment.hpp"
#include "snsim/graph.hpp"
#include "snsim/simulator.hpp"

namespace snsim {

// Population-level preference data under search: one sign and one weight per
// feature, applied identically to every node.
struct Genome {
  std::vector<int> signs;       // each -1 or +1
  std::vector<double> weights;  // each in [0,1]

  std::size_t feature_count() const { return signs.size(); }
  void validate() const;
};

struct NsgaParams {
  std::size_t population = 20;   // even, >= 4
  std::size_t generations = 10;
  double crossover_prob = 0.9;
  double sbx_eta = 15.0;
  double mutation_eta = 20.0;
  // Per-gene mutation probability; defaults to 1/(2F) when unset.
  std::optional<double> mutation_prob;
  std::uint64_t seed = 0;

  void validate() const;
  double effective_mutation_prob(std::size_t feature_count) const;
};

// Both objectives are minimized: similarity is the best (lowest) combined
// index over the growth trace, cost the cumulative pair evaluations at that
// snapshot.
struct ObjectivePoint {
  double similarity = 0.0;
  double cost = 0.0;
};

// True when a is no worse on both objectives and strictly better on one.
bool dominates(const ObjectivePoint& a, const ObjectivePoint& b);

// Fronts of point indexes; front 0 is dominated by nothing, each later front
// only by earlier ones.
std::vector<std::vector<std::size_t>> non_dominated_sort(
    std::span<const ObjectivePoint> points);

// Crowding distances for one front: boundary points get +infinity, interior
// points accumulate normalized neighbor gaps per objective.
std::vector<double> crowding_distance(std::span<const ObjectivePoint> front);

struct FrontMember {
  Genome genome;
  ObjectivePoint objectives;
};

struct GenerationStat {
  std::size_t generation = 0;  // 1-based
  double best_similarity = 0.0;
  std::size_t front_size = 0;
};

struct EvolveResult {
  std::vector<FrontMember> front;       // final first front
  std::vector<GenerationStat> history;  // one row per generation
};

using ObjectiveFn = std::function<ObjectivePoint(const Genome&)>;

// Runs the simulator with the genome's preference data stamped onto
// sim_config's attributes and assesses every snapshot against the target.
// Pure given the config seeds.
ObjectivePoint evaluate_genome(const Genome& genome,
                               const AttributedNetwork& target,
                               const SimulationConfig& sim_config,
                               const EnsembleConfig& ensemble);

// Generic NSGA-II over Genome encodings: binary tournament on (rank,
// crowding), SBX + polynomial mutation on weights, uniform crossover +
// bit-flip on signs, (mu + lambda) elitist survival. Deterministic under a
// fixed seed.
EvolveResult evolve(std::size_t feature_count, const ObjectiveFn& objective,
                    const NsgaParams& params);

// The spec'd entry point: search preference data against a target network.
EvolveResult evolve(const AttributedNetwork& target,
                    const SimulationConfig& sim_config,
                    const EnsembleConfig& ensemble, const NsgaParams& params);

}  // namespace snsim
