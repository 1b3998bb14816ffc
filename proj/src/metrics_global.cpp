#include "snsim/metrics_global.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <utility>

#include "snsim/errors.hpp"

namespace snsim {
namespace {

double quantile_linear(const std::vector<double>& sorted, double p) {
  if (sorted.empty()) return 0.0;
  const double pos = p * static_cast<double>(sorted.size() - 1);
  const auto lo = static_cast<std::size_t>(pos);
  if (lo + 1 >= sorted.size()) return sorted.back();
  const double frac = pos - static_cast<double>(lo);
  return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

}  // namespace

Distribution make_distribution(std::vector<double> samples) {
  Distribution d;
  d.samples = std::move(samples);
  if (d.samples.empty()) return d;
  double sum = 0.0;
  for (double v : d.samples) sum += v;
  const double n = static_cast<double>(d.samples.size());
  const double mean = sum / n;
  double var = 0.0;
  for (double v : d.samples) var += (v - mean) * (v - mean);
  var /= n;

  std::vector<double> sorted = d.samples;
  std::sort(sorted.begin(), sorted.end());
  d.summary.mean = mean;
  d.summary.stddev = std::sqrt(var);
  d.summary.q25 = quantile_linear(sorted, 0.25);
  d.summary.q75 = quantile_linear(sorted, 0.75);
  d.summary.min = sorted.front();
  d.summary.max = sorted.back();
  return d;
}

double density(const AttributedNetwork& net) {
  if (net.node_count() < 2) {
    throw ValidationError("density needs at least 2 nodes");
  }
  return static_cast<double>(net.edge_count()) /
         static_cast<double>(net.max_edge_count());
}

double partition_modularity(const AttributedNetwork& net,
                            const std::vector<int>& community) {
  const double m = static_cast<double>(net.edge_count());
  if (m == 0.0) {
    throw ValidationError("modularity undefined on zero edges");
  }
  if (community.size() != net.node_count()) {
    throw ValidationError("partition size mismatch");
  }
  std::map<int, double> internal;  // edges inside each community
  std::map<int, double> degsum;    // total degree per community
  for (NodeId i = 0; i < net.node_count(); ++i) {
    degsum[community[i]] += static_cast<double>(net.degree(i));
  }
  for (const auto& [i, j] : net.edges()) {
    if (community[i] == community[j]) internal[community[i]] += 1.0;
  }
  double q = 0.0;
  for (const auto& [c, d] : degsum) {
    const double ein = internal.count(c) ? internal.at(c) : 0.0;
    const double frac = d / (2.0 * m);
    q += ein / m - frac * frac;
  }
  return q;
}

std::optional<ModularityResult> modularity(const AttributedNetwork& net) {
  const std::size_t n = net.node_count();
  if (net.edge_count() == 0) return std::nullopt;
  const double m = static_cast<double>(net.edge_count());

  // Agglomerative merging on the community graph. Communities keep the
  // smallest member id as their label so tie-breaks are stable.
  std::vector<int> community(n);
  std::map<int, double> degsum;
  for (NodeId i = 0; i < n; ++i) {
    community[i] = static_cast<int>(i);
    degsum[static_cast<int>(i)] = static_cast<double>(net.degree(i));
  }
  std::map<std::pair<int, int>, double> between;
  for (const auto& [i, j] : net.edges()) {
    between[{static_cast<int>(i), static_cast<int>(j)}] += 1.0;
  }

  while (!between.empty()) {
    // Only community pairs joined by an edge can yield a positive gain.
    std::pair<int, int> best{-1, -1};
    double best_gain = 0.0;
    for (const auto& [pair, e_ab] : between) {
      const double gain = e_ab / m - 2.0 * (degsum[pair.first] / (2.0 * m)) *
                                         (degsum[pair.second] / (2.0 * m));
      if (gain > best_gain) {
        best_gain = gain;
        best = pair;
      }
    }
    if (best.first < 0) break;  // no merge improves Q

    const auto [a, b] = best;
    for (NodeId i = 0; i < n; ++i) {
      if (community[i] == b) community[i] = a;
    }
    degsum[a] += degsum[b];
    degsum.erase(b);
    // Redirect b's inter-community edges to a.
    std::map<std::pair<int, int>, double> rewired;
    for (const auto& [pair, count] : between) {
      int x = pair.first == b ? a : pair.first;
      int y = pair.second == b ? a : pair.second;
      if (x == y) continue;  // the merged pair itself disappears
      if (x > y) std::swap(x, y);
      rewired[{x, y}] += count;
    }
    between = std::move(rewired);
  }

  return ModularityResult{partition_modularity(net, community), community};
}

std::optional<double> degree_assortativity(const AttributedNetwork& net) {
  if (net.edge_count() == 0) return std::nullopt;
  double sx = 0.0, sxx = 0.0, sxy = 0.0;
  const double count = 2.0 * static_cast<double>(net.edge_count());
  for (const auto& [i, j] : net.edges()) {
    const double di = static_cast<double>(net.degree(i));
    const double dj = static_cast<double>(net.degree(j));
    sx += di + dj;
    sxx += di * di + dj * dj;
    sxy += 2.0 * di * dj;
  }
  const double mean = sx / count;
  const double var = sxx / count - mean * mean;
  const double cov = sxy / count - mean * mean;
  if (var <= 1e-12) return std::nullopt;  // degenerate: all endpoint degrees equal
  return cov / var;
}

Distribution degree_distribution(const AttributedNetwork& net) {
  std::vector<double> samples;
  samples.reserve(net.node_count());
  for (NodeId i = 0; i < net.node_count(); ++i) {
    samples.push_back(static_cast<double>(net.degree(i)));
  }
  return make_distribution(std::move(samples));
}

Distribution shortest_path_distribution(const AttributedNetwork& net) {
  const std::size_t n = net.node_count();
  if (n < 2) {
    throw ValidationError("shortest path distribution needs at least 2 nodes");
  }
  std::vector<double> samples;
  samples.reserve(n * (n - 1) / 2);
  std::vector<std::int32_t> dist;
  for (NodeId i = 0; i < n; ++i) {
    net.bfs_into(i, dist);
    for (NodeId j = i + 1; j < n; ++j) {
      samples.push_back(dist[j] >= 0 ? static_cast<double>(dist[j])
                                     : static_cast<double>(n));
    }
  }
  return make_distribution(std::move(samples));
}

}  // namespace snsim
