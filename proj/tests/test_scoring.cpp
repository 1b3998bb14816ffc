#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "snsim/errors.hpp"
#include "snsim/graph.hpp"
#include "snsim/rng.hpp"
#include "snsim/scoring.hpp"

using namespace snsim;

namespace {

AttributedNetwork two_nodes_binary(double fi, double fj, int sign, double w) {
  NodeAttributes a = NodeAttributes::from_features({fi});
  NodeAttributes b = NodeAttributes::from_features({fj});
  a.preference_signs = {sign};
  b.preference_signs = {sign};
  a.preference_weights = {w};
  b.preference_weights = {w};
  return AttributedNetwork{{a, b}};
}

AttributedNetwork random_attributed(std::size_t n, Rng& rng) {
  std::vector<NodeAttributes> attrs;
  for (std::size_t i = 0; i < n; ++i) {
    NodeAttributes a = NodeAttributes::from_features(
        {rng.below(2) ? 1.0 : 0.0, rng.uniform01()});
    a.preference_signs = {rng.sign(), rng.sign()};
    a.preference_weights = {rng.uniform01(), rng.uniform01()};
    attrs.push_back(std::move(a));
  }
  AttributedNetwork net{std::move(attrs)};
  const double p = rng.uniform01();
  for (NodeId i = 0; i < n; ++i) {
    for (NodeId j = i + 1; j < n; ++j) {
      if (rng.uniform01() < p) net.add_edge(i, j);
    }
  }
  return net;
}

// Independent ranking oracle: score every unconnected pair through the
// public per-pair operation and stable-sort.
std::vector<ScoredPair> brute_force_rank(const AttributedNetwork& net,
                                         const ScoringParams& params,
                                         std::size_t k) {
  std::vector<ScoredPair> all;
  for (NodeId i = 0; i < net.node_count(); ++i) {
    for (NodeId j = i + 1; j < net.node_count(); ++j) {
      if (net.has_edge(i, j)) continue;
      all.push_back({i, j, pair_score(net, i, j, params)});
    }
  }
  std::stable_sort(all.begin(), all.end(),
                   [](const ScoredPair& a, const ScoredPair& b) {
                     if (a.score != b.score) return a.score > b.score;
                     if (a.i != b.i) return a.i < b.i;
                     return a.j < b.j;
                   });
  if (all.size() > k) all.resize(k);
  return all;
}

}  // namespace

TEST_CASE("feature score") {
  SUBCASE("no features means zero") {
    AttributedNetwork net{3};
    CHECK(feature_score(net, 0, 1, {}) == 0.0);
  }
  SUBCASE("binary difference with half weights") {
    const auto net = two_nodes_binary(1.0, 0.0, 1, 0.5);
    CHECK(feature_score(net, 0, 1, {}) == doctest::Approx(1.0));
  }
  SUBCASE("identical features score zero in literal mode") {
    const auto net = two_nodes_binary(0.7, 0.7, -1, 0.9);
    ScoringParams p;
    p.tau = 2.5;
    CHECK(feature_score(net, 0, 1, p) == 0.0);
  }
  SUBCASE("similarity mode flips the difference term") {
    const auto net = two_nodes_binary(1.0, 0.0, 1, 0.5);
    ScoringParams p;
    p.feature_mode = FeatureMode::similarity;
    CHECK(feature_score(net, 0, 1, p) == doctest::Approx(0.0));
    const auto same = two_nodes_binary(1.0, 1.0, 1, 0.5);
    CHECK(feature_score(same, 0, 1, p) == doctest::Approx(1.0));
  }
}

TEST_CASE("popularity score") {
  AttributedNetwork net{5};
  ScoringParams p;
  CHECK(popularity_score(net, 0, 1, p) == 0.0);

  net.add_edge(0, 2);
  net.add_edge(0, 3);
  net.add_edge(1, 2);
  net.add_edge(1, 3);
  net.add_edge(1, 4);
  // deg(0) = 2, deg(1) = 3
  CHECK(popularity_score(net, 0, 1, p) == doctest::Approx(5.0));

  p.attachment_factor = 0.0;
  CHECK(popularity_score(net, 0, 1, p) == 0.0);

  SUBCASE("monotone under incident edge additions") {
    ScoringParams unit;
    AttributedNetwork g{4};
    const double before = popularity_score(g, 0, 1, unit);
    g.add_edge(0, 2);
    const double after = popularity_score(g, 0, 1, unit);
    CHECK(after >= before);
  }
}

TEST_CASE("path score") {
  ScoringParams p;
  p.gamma = {0.5, 0.5};
  p.max_path_length = 3;

  SUBCASE("disconnected pairs score zero") {
    AttributedNetwork net{4};
    CHECK(path_score(net, 0, 3, p) == 0.0);
  }
  SUBCASE("length-2 path") {
    AttributedNetwork net{3};
    net.add_edge(0, 1);
    net.add_edge(1, 2);
    CHECK(path_score(net, 0, 2, p) == doctest::Approx(0.5));
  }
  SUBCASE("paths beyond the window score zero") {
    AttributedNetwork net{5};
    net.add_edge(0, 1);
    net.add_edge(1, 2);
    net.add_edge(2, 3);
    net.add_edge(3, 4);
    // shortest path 0..4 has length 4 > max_path_length
    CHECK(path_score(net, 0, 4, p) == 0.0);
    CHECK(path_score(net, 0, 3, p) == doctest::Approx(2.0 * 0.125));
  }
}

TEST_CASE("pair score composes the three parts") {
  SUBCASE("all weights zero") {
    AttributedNetwork net{3};
    ScoringParams p;
    p.feature_weight = p.popularity_weight = p.path_weight = 0.0;
    CHECK(pair_score(net, 0, 1, p) == 0.0);
  }
  SUBCASE("known composition") {
    // Build phi = 1 (binary features, w = 0.5), delta = 5, pi = 0.5.
    NodeAttributes a = NodeAttributes::from_features({1.0});
    a.preference_weights = {0.5};
    NodeAttributes b = NodeAttributes::from_features({0.0});
    b.preference_weights = {0.5};
    auto c = NodeAttributes::from_features({0.0});
    auto d = NodeAttributes::from_features({0.0});
    auto e = NodeAttributes::from_features({0.0});
    AttributedNetwork net{{a, b, c, d, e}};
    // deg(0) = 2, deg(1) = 3 and a 2-hop path 0-2-1.
    net.add_edge(0, 2);
    net.add_edge(0, 3);
    net.add_edge(1, 2);
    net.add_edge(1, 3);
    net.add_edge(1, 4);
    ScoringParams p;
    p.gamma = {0.5, 0.5};
    CHECK(feature_score(net, 0, 1, p) == doctest::Approx(1.0));
    CHECK(popularity_score(net, 0, 1, p) == doctest::Approx(5.0));
    CHECK(path_score(net, 0, 1, p) == doctest::Approx(0.5));
    CHECK(pair_score(net, 0, 1, p) == doctest::Approx(6.5));
  }
  SUBCASE("scaling the weights scales the score") {
    Rng rng(5);
    const auto net = random_attributed(6, rng);
    ScoringParams p;
    p.gamma = {0.4, 0.7};
    const double base = pair_score(net, 0, 5, p);
    ScoringParams scaled = p;
    scaled.feature_weight *= 3.0;
    scaled.popularity_weight *= 3.0;
    scaled.path_weight *= 3.0;
    CHECK(pair_score(net, 0, 5, scaled) == doctest::Approx(3.0 * base));
  }
  SUBCASE("symmetry") {
    Rng rng(9);
    for (int round = 0; round < 10; ++round) {
      const auto net = random_attributed(7, rng);
      for (NodeId i = 0; i < 7; ++i) {
        for (NodeId j = i + 1; j < 7; ++j) {
          ScoringParams p;
          CHECK(pair_score(net, i, j, p) == pair_score(net, j, i, p));
        }
      }
    }
  }
}

TEST_CASE("rank_unconnected_pairs") {
  SUBCASE("empty graph ties break lexicographically") {
    AttributedNetwork net{4};
    const auto top = rank_unconnected_pairs(net, {}, 3);
    REQUIRE(top.size() == 3);
    CHECK(top[0].i == 0);
    CHECK(top[0].j == 1);
    CHECK(top[1].i == 0);
    CHECK(top[1].j == 2);
  }
  SUBCASE("k of zero yields nothing") {
    AttributedNetwork net{4};
    CHECK(rank_unconnected_pairs(net, {}, 0).empty());
  }
  SUBCASE("fewer unconnected pairs than k yields all of them") {
    AttributedNetwork net{3};
    net.add_edge(0, 1);
    const auto top = rank_unconnected_pairs(net, {}, 10);
    CHECK(top.size() == 2);
  }
  SUBCASE("matches the exhaustive oracle on random graphs") {
    Rng rng(1234);
    for (int round = 0; round < 200; ++round) {
      const std::size_t n = 2 + rng.below(7);  // up to 8 nodes
      const auto net = random_attributed(n, rng);
      ScoringParams p;
      p.attachment_factor = rng.uniform01() * 2.0;
      p.gamma = {rng.uniform01(), rng.uniform01()};
      const std::size_t k = rng.below(net.max_edge_count() + 2);
      const auto fast = rank_unconnected_pairs(net, p, k);
      const auto slow = brute_force_rank(net, p, k);
      REQUIRE(fast.size() == slow.size());
      for (std::size_t t = 0; t < fast.size(); ++t) {
        CHECK(fast[t].i == slow[t].i);
        CHECK(fast[t].j == slow[t].j);
        CHECK(fast[t].score == slow[t].score);
      }
    }
  }
}

TEST_CASE("scoring params validation") {
  ScoringParams p;
  p.gamma = {0.5};  // wrong length for max_path_length = 3
  CHECK_THROWS_AS(p.validate(), ValidationError);
  p.gamma = {0.5, 0.5};
  CHECK_NOTHROW(p.validate());
  p.tau = 0.0;
  CHECK_THROWS_AS(p.validate(), ValidationError);
}
