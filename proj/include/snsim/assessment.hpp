#pragma once

#include <array>
#include <optional>
#include <span>
#include <string_view>

#include "snsim/graph.hpp"
#include "snsim/metrics_global.hpp"
#include "snsim/metrics_local.hpp"

namespace snsim {

// The ten assessed measures. The first five form the global index, the last
// five the local index.
enum class Measure {
  density = 0,
  modularity,
  assortativity,
  degree_kl,
  path_kl,
  clustering_kl,
  sp1,
  sp2,
  sp3,
  sp4,
};

inline constexpr std::size_t kMeasureCount = 10;

std::string_view measure_name(Measure m);

struct MeasureDistance {
  Measure name = Measure::density;
  double value = 1.0;  // always in [0,1]; 1 when missing
  bool missing = false;
};

struct IndexReport {
  std::array<MeasureDistance, kMeasureCount> per_measure;
  double global_index = 1.0;
  double local_index = 1.0;
  double combined_index = 1.0;
  std::array<double, kMeasureCount> weights{};
};

inline constexpr std::array<double, kMeasureCount> kUniformWeights{
    0.1, 0.1, 0.1, 0.1, 0.1, 0.1, 0.1, 0.1, 0.1, 0.1};

// Histogram layout for a distribution distance.
struct BinSpec {
  double lo = 0.0;
  double hi = 1.0;
  std::size_t bins = 10;
};

// KL(sim || target) over the binned, smoothed histograms (alpha = 1e-6 per
// bin), clipped to [0,1]. Either sample set empty -> 1 (missing).
double kl_distance(std::span<const double> sim, std::span<const double> target,
                   const BinSpec& binning);

// |norm(x) - norm(y)| with norm(v) = (v-lo)/(hi-lo), clipped to [0,1]; any
// missing operand -> 1.
double scalar_distance(std::optional<double> x, std::optional<double> y,
                       double lo, double hi);

// Everything the composite index consumes about one network. Fields are
// optional so degenerate inputs propagate as missing (distance 1), never as
// silent zeros.
struct NetworkMetrics {
  std::size_t node_count = 0;
  std::optional<double> density;
  std::optional<double> modularity;
  std::optional<double> assortativity;
  Distribution degree;
  Distribution path;
  Distribution clustering;
  std::array<std::optional<double>, 4> sp;
};

// Computes all ten ingredients. triad_labels may be empty (no binary
// attribute available), which leaves the significance profile missing.
NetworkMetrics collect_metrics(const AttributedNetwork& net,
                               std::span<const double> triad_labels,
                               const EnsembleConfig& ensemble);

// Per-measure distances and the weighted indexes. Scalar measures use fixed
// theoretical ranges (density [0,1], modularity [-0.5,1], assortativity and
// SPs [-1,1]); distributions use fixed bins (degree: integers 0..N-1, path:
// integers 1..N, clustering: 10 uniform bins on [0,1]). Weights must be
// non-negative and sum to 1.
IndexReport composite_index(const NetworkMetrics& sim,
                            const NetworkMetrics& target,
                            const std::array<double, kMeasureCount>& weights =
                                kUniformWeights);

}  // namespace snsim
