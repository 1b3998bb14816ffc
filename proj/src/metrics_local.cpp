#include "snsim/metrics_local.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <unordered_set>
#include <vector>

#include "snsim/errors.hpp"

namespace snsim {

void EnsembleConfig::validate() const {
  if (samples < 1) {
    throw ValidationError("ensemble needs at least 1 sample");
  }
}

Distribution clustering_distribution(const AttributedNetwork& net) {
  std::vector<double> samples;
  samples.reserve(net.node_count());
  for (NodeId i = 0; i < net.node_count(); ++i) {
    const auto& nbrs = net.neighbors(i);
    const std::size_t d = nbrs.size();
    if (d < 2) {
      samples.push_back(0.0);
      continue;
    }
    std::size_t links = 0;
    for (std::size_t a = 0; a < d; ++a) {
      for (std::size_t b = a + 1; b < d; ++b) {
        if (net.has_edge(nbrs[a], nbrs[b])) ++links;
      }
    }
    samples.push_back(2.0 * static_cast<double>(links) /
                      static_cast<double>(d * (d - 1)));
  }
  return make_distribution(std::move(samples));
}

TriadCensus triad_census(const AttributedNetwork& net,
                         std::span<const double> labels) {
  if (labels.size() != net.node_count()) {
    throw ValidationError("triad census labels cover " +
                          std::to_string(labels.size()) + " of " +
                          std::to_string(net.node_count()) + " nodes");
  }
  for (double v : labels) {
    if (v != 0.0 && v != 1.0) {
      throw ValidationError("triad census needs a binary (0/1) attribute, saw " +
                            std::to_string(v));
    }
  }
  TriadCensus census;
  for (NodeId a = 0; a < net.node_count(); ++a) {
    for (NodeId b : net.neighbors(a)) {
      if (b <= a) continue;
      // Common neighbors above b close a triangle exactly once.
      const auto& na = net.neighbors(a);
      const auto& nb = net.neighbors(b);
      auto ia = std::upper_bound(na.begin(), na.end(), b);
      auto ib = std::upper_bound(nb.begin(), nb.end(), b);
      while (ia != na.end() && ib != nb.end()) {
        if (*ia < *ib) {
          ++ia;
        } else if (*ib < *ia) {
          ++ib;
        } else {
          const NodeId c = *ia;
          const int zeros = (labels[a] == 0.0) + (labels[b] == 0.0) +
                            (labels[c] == 0.0);
          ++census.counts[zeros];
          ++ia;
          ++ib;
        }
      }
    }
  }
  return census;
}

TriadCensus triad_census(const AttributedNetwork& net) {
  if (net.feature_count() == 0) {
    throw ValidationError("triad census needs a first feature column");
  }
  std::vector<double> labels;
  labels.reserve(net.node_count());
  for (NodeId i = 0; i < net.node_count(); ++i) {
    labels.push_back(net.attributes(i).features[0]);
  }
  return triad_census(net, labels);
}

AttributedNetwork sample_gnm(std::size_t n, std::size_t m, Rng& rng) {
  AttributedNetwork net{n};
  const std::size_t possible = net.max_edge_count();
  if (m > possible) {
    throw ValidationError("cannot place " + std::to_string(m) +
                          " edges among " + std::to_string(possible) +
                          " possible pairs");
  }
  // Uniform over edge sets: draw distinct pairs, rejecting repeats. When m
  // exceeds half of the possible pairs, draw the complement instead so the
  // rejection loop stays fast near saturation.
  const bool complement = m > possible / 2;
  const std::size_t draws = complement ? possible - m : m;
  std::unordered_set<std::uint64_t> chosen;
  chosen.reserve(draws * 2);
  while (chosen.size() < draws) {
    const auto i = static_cast<NodeId>(rng.below(n));
    const auto j = static_cast<NodeId>(rng.below(n));
    if (i == j) continue;
    const NodeId lo = std::min(i, j);
    const NodeId hi = std::max(i, j);
    chosen.insert((static_cast<std::uint64_t>(lo) << 32) | hi);
  }
  if (!complement) {
    for (std::uint64_t key : chosen) {
      net.add_edge(static_cast<NodeId>(key >> 32),
                   static_cast<NodeId>(key & 0xffffffffULL));
    }
  } else {
    for (NodeId i = 0; i + 1 < n; ++i) {
      for (NodeId j = i + 1; j < n; ++j) {
        const std::uint64_t key = (static_cast<std::uint64_t>(i) << 32) | j;
        if (!chosen.count(key)) net.add_edge(i, j);
      }
    }
  }
  return net;
}

std::array<std::optional<double>, 4> triad_zscores(
    const AttributedNetwork& net, std::span<const double> labels,
    const EnsembleConfig& ensemble) {
  ensemble.validate();
  const TriadCensus observed = triad_census(net, labels);

  std::array<double, 4> sum{};
  std::array<double, 4> sumsq{};
  for (std::size_t s = 0; s < ensemble.samples; ++s) {
    Rng rng(derive_seed(ensemble.seed, kStreamEnsembleSample, s));
    const AttributedNetwork sample =
        sample_gnm(net.node_count(), net.edge_count(), rng);
    const TriadCensus c = triad_census(sample, labels);
    for (std::size_t t = 0; t < 4; ++t) {
      const auto v = static_cast<double>(c.counts[t]);
      sum[t] += v;
      sumsq[t] += v * v;
    }
  }

  std::array<std::optional<double>, 4> z;
  const double count = static_cast<double>(ensemble.samples);
  for (std::size_t t = 0; t < 4; ++t) {
    const double mean = sum[t] / count;
    const double var = std::max(0.0, sumsq[t] / count - mean * mean);
    const double sd = std::sqrt(var);
    const double diff = static_cast<double>(observed.counts[t]) - mean;
    if (sd > 0.0) {
      z[t] = diff / sd;
    } else {
      z[t] = diff == 0.0 ? 0.0 : (diff > 0.0 ? 10.0 : -10.0);
    }
  }
  return z;
}

std::array<std::optional<double>, 4> significance_profile(
    const std::array<std::optional<double>, 4>& z) {
  double sumsq = 0.0;
  bool any_present = false;
  for (const auto& v : z) {
    if (v.has_value()) {
      any_present = true;
      sumsq += *v * *v;
    }
  }
  std::array<std::optional<double>, 4> sp;
  if (!any_present || sumsq == 0.0) {
    return sp;  // all missing: nothing to normalize
  }
  const double norm = std::sqrt(sumsq);
  for (std::size_t t = 0; t < 4; ++t) {
    if (z[t].has_value()) sp[t] = *z[t] / norm;
  }
  return sp;
}

}  // namespace snsim
