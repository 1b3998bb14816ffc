#include "snsim/scoring.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "snsim/errors.hpp"

namespace snsim {
namespace {

double difference_term(double fi, double fj, const ScoringParams& params) {
  const double d = std::abs(fi - fj);
  const double powd = (params.tau == 1.0) ? d : std::pow(d, params.tau);
  return params.feature_mode == FeatureMode::literal ? powd : 1.0 - powd;
}

double path_term(std::int32_t dist, const ScoringParams& params) {
  if (dist < 2 || dist > static_cast<std::int32_t>(params.max_path_length)) {
    return 0.0;
  }
  const double g = params.gamma[static_cast<std::size_t>(dist) - 2];
  const double term = std::pow(g, static_cast<double>(dist));
  return term + term;  // both endpoints share the population-level gamma
}

}  // namespace

void ScoringParams::validate() const {
  auto check_weight = [](double v, const char* name) {
    if (!std::isfinite(v) || v < 0.0) {
      throw ValidationError(std::string(name) + " must be finite and >= 0");
    }
  };
  check_weight(feature_weight, "feature weight q");
  check_weight(popularity_weight, "popularity weight r");
  check_weight(path_weight, "path weight c");
  check_weight(attachment_factor, "attachment factor m");
  if (!std::isfinite(tau) || tau <= 0.0) {
    throw ValidationError("tau must be finite and > 0");
  }
  if (max_path_length < 2) {
    throw ValidationError("max path length must be >= 2");
  }
  if (gamma.size() != max_path_length - 1) {
    throw ValidationError("gamma has " + std::to_string(gamma.size()) +
                          " entries, expected " +
                          std::to_string(max_path_length - 1));
  }
  for (double g : gamma) {
    if (!std::isfinite(g) || g < 0.0 || g > 1.0) {
      throw ValidationError("gamma entries must lie in [0,1]");
    }
  }
}

double feature_score(const AttributedNetwork& net, NodeId i, NodeId j,
                     const ScoringParams& params) {
  const NodeAttributes& ai = net.attributes(i);
  const NodeAttributes& aj = net.attributes(j);
  if (ai.feature_count() != aj.feature_count()) {
    throw ValidationError("attribute length mismatch between nodes " +
                          std::to_string(i) + " and " + std::to_string(j));
  }
  double sum = 0.0;
  for (std::size_t f = 0; f < ai.feature_count(); ++f) {
    const double term = difference_term(ai.features[f], aj.features[f], params);
    // Factored form keeps the score bit-for-bit symmetric in (i, j).
    sum += term * (ai.preference_weights[f] * ai.preference_signs[f] +
                   aj.preference_weights[f] * aj.preference_signs[f]);
  }
  return sum;
}

double popularity_score(const AttributedNetwork& net, NodeId i, NodeId j,
                        const ScoringParams& params) {
  return params.attachment_factor *
         static_cast<double>(net.degree(i) + net.degree(j));
}

double path_score(const AttributedNetwork& net, NodeId i, NodeId j,
                  const ScoringParams& params) {
  net.require_node(j);
  std::vector<std::int32_t> dist;
  net.bfs_into(i, dist, static_cast<std::int32_t>(params.max_path_length));
  return path_term(dist[j], params);
}

double pair_score(const AttributedNetwork& net, NodeId i, NodeId j,
                  const ScoringParams& params) {
  return params.feature_weight * feature_score(net, i, j, params) +
         params.popularity_weight * popularity_score(net, i, j, params) +
         params.path_weight * path_score(net, i, j, params);
}

std::vector<ScoredPair> rank_unconnected_pairs(const AttributedNetwork& net,
                                               const ScoringParams& params,
                                               std::size_t k) {
  params.validate();
  const std::size_t n = net.node_count();
  std::vector<ScoredPair> scored;
  if (k == 0 || net.saturated()) return scored;
  scored.reserve(net.max_edge_count() - net.edge_count());

  // One depth-limited BFS per source gives every pairwise path term; the
  // per-pair arithmetic below matches pair_score exactly, term for term.
  std::vector<std::int32_t> dist;
  for (NodeId i = 0; i < n; ++i) {
    net.bfs_into(i, dist, static_cast<std::int32_t>(params.max_path_length));
    const auto& nbrs = net.neighbors(i);
    auto next_nbr = std::upper_bound(nbrs.begin(), nbrs.end(), i);
    for (NodeId j = i + 1; j < n; ++j) {
      if (next_nbr != nbrs.end() && *next_nbr == j) {
        ++next_nbr;
        continue;  // already connected
      }
      const double score =
          params.feature_weight * feature_score(net, i, j, params) +
          params.popularity_weight * popularity_score(net, i, j, params) +
          params.path_weight * path_term(dist[j], params);
      scored.push_back({i, j, score});
    }
  }

  std::sort(scored.begin(), scored.end(),
            [](const ScoredPair& a, const ScoredPair& b) {
              if (a.score != b.score) return a.score > b.score;
              if (a.i != b.i) return a.i < b.i;
              return a.j < b.j;
            });
  if (scored.size() > k) scored.resize(k);
  return scored;
}

}  // namespace snsim
