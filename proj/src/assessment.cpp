#include "snsim/assessment.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "snsim/errors.hpp"

namespace snsim {
namespace {

constexpr double kSmoothing = 1e-6;

std::vector<double> smoothed_histogram(std::span<const double> samples,
                                       const BinSpec& b) {
  std::vector<double> h(b.bins, 0.0);
  const double width = (b.hi - b.lo) / static_cast<double>(b.bins);
  for (double v : samples) {
    auto idx = static_cast<std::int64_t>(std::floor((v - b.lo) / width));
    idx = std::clamp<std::int64_t>(idx, 0,
                                   static_cast<std::int64_t>(b.bins) - 1);
    h[static_cast<std::size_t>(idx)] += 1.0;
  }
  const double n = static_cast<double>(samples.size());
  const double denom = 1.0 + static_cast<double>(b.bins) * kSmoothing;
  for (double& p : h) {
    p = (p / n + kSmoothing) / denom;
  }
  return h;
}

double clip01(double v) { return std::clamp(v, 0.0, 1.0); }

}  // namespace

std::string_view measure_name(Measure m) {
  switch (m) {
    case Measure::density: return "density";
    case Measure::modularity: return "modularity";
    case Measure::assortativity: return "assortativity";
    case Measure::degree_kl: return "degree_kl";
    case Measure::path_kl: return "path_kl";
    case Measure::clustering_kl: return "clustering_kl";
    case Measure::sp1: return "sp1";
    case Measure::sp2: return "sp2";
    case Measure::sp3: return "sp3";
    case Measure::sp4: return "sp4";
  }
  return "unknown";
}

double kl_distance(std::span<const double> sim, std::span<const double> target,
                   const BinSpec& binning) {
  if (binning.bins == 0 || !(binning.hi > binning.lo)) {
    throw ValidationError("bad bin spec");
  }
  if (sim.empty() || target.empty()) return 1.0;
  const auto p = smoothed_histogram(sim, binning);
  const auto q = smoothed_histogram(target, binning);
  double kl = 0.0;
  for (std::size_t b = 0; b < binning.bins; ++b) {
    kl += p[b] * std::log(p[b] / q[b]);
  }
  return clip01(kl);
}

double scalar_distance(std::optional<double> x, std::optional<double> y,
                       double lo, double hi) {
  if (!(lo < hi)) {
    throw ValidationError("scalar distance needs lo < hi");
  }
  if (!x.has_value() || !y.has_value()) return 1.0;
  const double nx = (*x - lo) / (hi - lo);
  const double ny = (*y - lo) / (hi - lo);
  return clip01(std::abs(nx - ny));
}

NetworkMetrics collect_metrics(const AttributedNetwork& net,
                               std::span<const double> triad_labels,
                               const EnsembleConfig& ensemble) {
  NetworkMetrics m;
  m.node_count = net.node_count();
  m.density = density(net);
  if (auto q = modularity(net)) m.modularity = q->value;
  m.assortativity = degree_assortativity(net);
  m.degree = degree_distribution(net);
  m.path = shortest_path_distribution(net);
  m.clustering = clustering_distribution(net);
  if (!triad_labels.empty()) {
    m.sp = significance_profile(triad_zscores(net, triad_labels, ensemble));
  }
  return m;
}

IndexReport composite_index(const NetworkMetrics& sim,
                            const NetworkMetrics& target,
                            const std::array<double, kMeasureCount>& weights) {
  if (sim.node_count != target.node_count) {
    throw ValidationError("node count mismatch: simulated " +
                          std::to_string(sim.node_count) + " vs target " +
                          std::to_string(target.node_count));
  }
  double wsum = 0.0;
  for (double w : weights) {
    if (!std::isfinite(w) || w < 0.0) {
      throw ValidationError("weights must be non-negative");
    }
    wsum += w;
  }
  if (std::abs(wsum - 1.0) > 1e-9) {
    throw ValidationError("weights must sum to 1, got " + std::to_string(wsum));
  }

  const double n = static_cast<double>(sim.node_count);
  IndexReport report;
  report.weights = weights;

  auto scalar = [](std::optional<double> a, std::optional<double> b, double lo,
                   double hi) {
    MeasureDistance d;
    d.missing = !a.has_value() || !b.has_value();
    d.value = scalar_distance(a, b, lo, hi);
    return d;
  };
  auto distribution = [](const Distribution& a, const Distribution& b,
                         const BinSpec& bins) {
    MeasureDistance d;
    d.missing = a.samples.empty() || b.samples.empty();
    d.value = kl_distance(a.samples, b.samples, bins);
    return d;
  };

  report.per_measure[0] = scalar(sim.density, target.density, 0.0, 1.0);
  report.per_measure[1] =
      scalar(sim.modularity, target.modularity, -0.5, 1.0);
  report.per_measure[2] =
      scalar(sim.assortativity, target.assortativity, -1.0, 1.0);
  report.per_measure[3] = distribution(sim.degree, target.degree,
                                       BinSpec{0.0, n, sim.node_count});
  report.per_measure[4] = distribution(
      sim.path, target.path, BinSpec{1.0, n + 1.0, sim.node_count});
  report.per_measure[5] = distribution(sim.clustering, target.clustering,
                                       BinSpec{0.0, 1.0, 10});
  for (std::size_t t = 0; t < 4; ++t) {
    report.per_measure[6 + t] = scalar(sim.sp[t], target.sp[t], -1.0, 1.0);
  }
  for (std::size_t i = 0; i < kMeasureCount; ++i) {
    report.per_measure[i].name = static_cast<Measure>(i);
  }

  double combined = 0.0;
  double global_num = 0.0, global_den = 0.0;
  double local_num = 0.0, local_den = 0.0;
  for (std::size_t i = 0; i < kMeasureCount; ++i) {
    const double term = weights[i] * report.per_measure[i].value;
    combined += term;
    if (i < 5) {
      global_num += term;
      global_den += weights[i];
    } else {
      local_num += term;
      local_den += weights[i];
    }
  }
  report.combined_index = combined;
  report.global_index = global_den > 0.0 ? global_num / global_den : 0.0;
  report.local_index = local_den > 0.0 ? local_num / local_den : 0.0;
  return report;
}

}  // namespace snsim
