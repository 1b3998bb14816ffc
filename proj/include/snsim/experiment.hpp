#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "snsim/assessment.hpp"
#include "snsim/graph_io.hpp"
#include "snsim/metrics_local.hpp"
#include "snsim/optimizer.hpp"
#include "snsim/simulator.hpp"

namespace snsim {

inline constexpr std::string_view kToolName = "snsim";
inline constexpr std::string_view kToolVersion = "0.1.0";

// Feature setups compared by the experiment protocol: no features, the
// target's real attributes, one synthesized binary attribute, or the real
// attributes plus the synthesized one.
enum class Variant { zero, real, simulated, hybrid };

std::string_view variant_name(Variant v);
Variant variant_from_name(std::string_view name);

// Either the bundled karate dataset or a pair of files on disk.
struct TargetSpec {
  bool bundled_karate = true;
  std::string edges_path;
  std::optional<std::string> attributes_path;
};

struct ExperimentConfig {
  TargetSpec target;
  std::vector<Variant> variants = {Variant::zero, Variant::real,
                                   Variant::simulated, Variant::hybrid};
  SimulationConfig sim;  // initial_attributes filled per variant at run time
  NsgaParams nsga;
  EnsembleConfig ensemble;
  std::array<double, kMeasureCount> weights = kUniformWeights;
  std::string output_dir;  // empty: compute only, write nothing
  bool force = false;
  std::uint64_t seed = 0;

  // Fixed population preference data for plain simulate runs (the
  // experiment itself searches for it instead).
  std::optional<Genome> sdna;

  // Sub-seeds; resolve_seeds() fills any that were not set explicitly.
  std::optional<std::uint64_t> feature_seed;
  std::optional<std::uint64_t> ensemble_seed;
  std::optional<std::uint64_t> optimizer_seed;

  void resolve_seeds();
};

// Parses the JSON config format described in the README. Unknown keys are
// rejected so typos fail loudly.
ExperimentConfig parse_experiment_config(const std::string& json_text);

LoadedNetwork load_target(const TargetSpec& spec);

// First-feature values when they are binary over all nodes, else empty.
// Assessment classifies triads of simulated networks with the target's
// labels: the node set is shared, and features drive scoring only.
std::vector<double> binary_labels(const AttributedNetwork& net);

// Initial attributes (features plus default preference data) for one
// variant over the target's node set. real/hybrid need target attributes.
std::vector<NodeAttributes> variant_attributes(Variant v,
                                               const AttributedNetwork& target,
                                               std::uint64_t feature_seed);

struct VariantRun {
  Variant variant = Variant::zero;
  std::size_t feature_count = 0;
  bool optimized = false;
  Genome genome;  // preference data the reported trace ran with
  std::optional<ObjectivePoint> objectives;
  GrowthTrace trace;
  std::vector<IndexReport> series;  // one per snapshot
  std::vector<FrontMember> front;
  std::vector<GenerationStat> history;
};

struct ExperimentReport {
  ExperimentConfig config;  // seeds resolved
  LoadedNetwork target;
  std::vector<VariantRun> variants;
};

// The full protocol: per variant, optimize the preference data (skipped when
// the variant has no features), rerun the simulator with the best genome,
// assess every snapshot, and - when output_dir is set - write the report
// tree. Throws ValidationError before any compute when a variant needs
// attributes the target does not have.
ExperimentReport run_experiment(const ExperimentConfig& config);

// One growth trace for a single variant, no search and no assessment. Uses
// config.sdna when present, otherwise the default +1/1.0 preference data.
ExperimentReport run_single_trace(const ExperimentConfig& config, Variant v);

// Preference-data search for a single variant; the report carries the final
// front and generation history but no trace.
ExperimentReport run_optimize(const ExperimentConfig& config, Variant v);

// Loads two graphs, checks the node counts match, and assesses sim against
// target with uniform weights. Triad labels come from the target.
IndexReport assess_pair(const std::string& sim_path,
                        const std::string& target_path,
                        const std::optional<std::string>& target_attributes,
                        const EnsembleConfig& ensemble);

IndexReport assess_networks(const AttributedNetwork& sim,
                            const AttributedNetwork& target,
                            const EnsembleConfig& ensemble);

}  // namespace snsim
