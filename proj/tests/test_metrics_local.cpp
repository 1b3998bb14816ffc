#include <doctest.h>

#include <cmath>
#include <vector>

#include "snsim/errors.hpp"
#include "snsim/karate.hpp"
#include "snsim/metrics_local.hpp"
#include "snsim/rng.hpp"

using namespace snsim;

namespace {

std::vector<double> karate_labels(const AttributedNetwork& net) {
  std::vector<double> labels;
  for (NodeId i = 0; i < net.node_count(); ++i) {
    labels.push_back(net.attributes(i).features[0]);
  }
  return labels;
}

// Brute-force triangle census over all node triples.
TriadCensus census_oracle(const AttributedNetwork& net,
                          const std::vector<double>& labels) {
  TriadCensus c;
  const std::size_t n = net.node_count();
  for (NodeId a = 0; a < n; ++a) {
    for (NodeId b = a + 1; b < n; ++b) {
      if (!net.has_edge(a, b)) continue;
      for (NodeId d = b + 1; d < n; ++d) {
        if (net.has_edge(a, d) && net.has_edge(b, d)) {
          const int zeros =
              (labels[a] == 0.0) + (labels[b] == 0.0) + (labels[d] == 0.0);
          ++c.counts[zeros];
        }
      }
    }
  }
  return c;
}

AttributedNetwork random_labeled(std::size_t n, double p, Rng& rng,
                                 std::vector<double>& labels) {
  labels.clear();
  std::vector<NodeAttributes> attrs;
  for (std::size_t i = 0; i < n; ++i) {
    const double v = rng.below(2) ? 1.0 : 0.0;
    labels.push_back(v);
    attrs.push_back(NodeAttributes::from_features({v}));
  }
  AttributedNetwork net{std::move(attrs)};
  for (NodeId i = 0; i < n; ++i) {
    for (NodeId j = i + 1; j < n; ++j) {
      if (rng.uniform01() < p) net.add_edge(i, j);
    }
  }
  return net;
}

}  // namespace

TEST_CASE("clustering distribution") {
  SUBCASE("karate summary") {
    const auto d = clustering_distribution(load_karate().network);
    CHECK(std::abs(d.summary.mean - 0.57) < 0.01);
    CHECK(std::abs(d.summary.stddev - 0.34) < 0.01);
  }
  SUBCASE("triangle is fully clustered") {
    AttributedNetwork tri{3};
    tri.add_edge(0, 1);
    tri.add_edge(1, 2);
    tri.add_edge(0, 2);
    for (double v : clustering_distribution(tri).samples) CHECK(v == 1.0);
  }
  SUBCASE("star has no clustering") {
    AttributedNetwork star{5};
    for (NodeId leaf = 1; leaf < 5; ++leaf) star.add_edge(0, leaf);
    for (double v : clustering_distribution(star).samples) CHECK(v == 0.0);
  }
}

TEST_CASE("triad census") {
  SUBCASE("karate counts by club") {
    const auto karate = load_karate().network;
    const TriadCensus c = triad_census(karate);
    CHECK(c.counts[0] == 15);
    CHECK(c.counts[1] == 3);
    CHECK(c.counts[2] == 1);
    CHECK(c.counts[3] == 26);
    CHECK(c.total() == 45);
  }
  SUBCASE("one all-value-0 triangle") {
    std::vector<NodeAttributes> attrs(3, NodeAttributes::from_features({0.0}));
    AttributedNetwork tri{std::move(attrs)};
    tri.add_edge(0, 1);
    tri.add_edge(1, 2);
    tri.add_edge(0, 2);
    const TriadCensus c = triad_census(tri);
    CHECK(c.counts[3] == 1);
    CHECK(c.total() == 1);
  }
  SUBCASE("triangle-free graphs count nothing") {
    std::vector<NodeAttributes> attrs(4, NodeAttributes::from_features({1.0}));
    AttributedNetwork square{std::move(attrs)};
    square.add_edge(0, 1);
    square.add_edge(1, 2);
    square.add_edge(2, 3);
    square.add_edge(0, 3);
    CHECK(triad_census(square).total() == 0);
  }
  SUBCASE("non-binary labels are rejected") {
    std::vector<NodeAttributes> attrs(3, NodeAttributes::from_features({0.5}));
    AttributedNetwork net{std::move(attrs)};
    CHECK_THROWS_AS(triad_census(net), ValidationError);
    AttributedNetwork bare{3};
    CHECK_THROWS_AS(triad_census(bare), ValidationError);
  }
  SUBCASE("matches the brute-force oracle up to 10 nodes") {
    Rng rng(55);
    for (int round = 0; round < 50; ++round) {
      std::vector<double> labels;
      const auto net =
          random_labeled(3 + rng.below(8), rng.uniform01(), rng, labels);
      const TriadCensus fast = triad_census(net, labels);
      const TriadCensus slow = census_oracle(net, labels);
      CHECK(fast.counts == slow.counts);
    }
  }
  SUBCASE("relabeling 0<->1 reverses the census") {
    Rng rng(66);
    std::vector<double> labels;
    const auto net = random_labeled(9, 0.5, rng, labels);
    std::vector<double> flipped;
    for (double v : labels) flipped.push_back(1.0 - v);
    const TriadCensus c = triad_census(net, labels);
    const TriadCensus r = triad_census(net, flipped);
    CHECK(c.counts[0] == r.counts[3]);
    CHECK(c.counts[1] == r.counts[2]);
    CHECK(c.counts[2] == r.counts[1]);
    CHECK(c.counts[3] == r.counts[0]);
  }
}

TEST_CASE("gnm sampling") {
  Rng rng(7);
  for (std::size_t m : {0ul, 1ul, 5ul, 9ul, 10ul}) {
    const auto g = sample_gnm(5, m, rng);
    CHECK(g.node_count() == 5);
    CHECK(g.edge_count() == m);
  }
  CHECK_THROWS_AS(sample_gnm(3, 4, rng), ValidationError);

  SUBCASE("same seed, same graph") {
    Rng a(99), b(99);
    CHECK(sample_gnm(12, 30, a).edges() == sample_gnm(12, 30, b).edges());
  }
}

TEST_CASE("triad z-scores") {
  SUBCASE("an ensemble identical to the observation zeroes every score") {
    // On a complete graph every G(n, m) sample is the same complete graph.
    std::vector<NodeAttributes> attrs;
    for (int i = 0; i < 5; ++i) {
      attrs.push_back(NodeAttributes::from_features({i < 2 ? 0.0 : 1.0}));
    }
    AttributedNetwork full{std::move(attrs)};
    for (NodeId i = 0; i < 5; ++i) {
      for (NodeId j = i + 1; j < 5; ++j) full.add_edge(i, j);
    }
    EnsembleConfig ens;
    ens.samples = 20;
    const auto z = triad_zscores(full, karate_labels(full), ens);
    for (const auto& v : z) {
      REQUIRE(v.has_value());
      CHECK(*v == 0.0);
    }
  }
  SUBCASE("karate profile is reproducible and close to the published one") {
    const auto karate = load_karate().network;
    EnsembleConfig ens;
    ens.samples = 100;
    ens.seed = 424242;
    const auto z1 = triad_zscores(karate, karate_labels(karate), ens);
    const auto z2 = triad_zscores(karate, karate_labels(karate), ens);
    for (std::size_t t = 0; t < 4; ++t) {
      REQUIRE(z1[t].has_value());
      CHECK(*z1[t] == *z2[t]);
    }
    const auto sp = significance_profile(z1);
    const double expected[4] = {0.59, -0.06, -0.12, 0.80};
    for (std::size_t t = 0; t < 4; ++t) {
      REQUIRE(sp[t].has_value());
      CHECK(std::abs(*sp[t] - expected[t]) < 0.15);
    }
  }
}

TEST_CASE("significance profile") {
  SUBCASE("known normalization") {
    const auto sp = significance_profile({3.0, 0.0, 0.0, 4.0});
    REQUIRE(sp[0].has_value());
    CHECK(*sp[0] == doctest::Approx(0.6));
    CHECK(*sp[1] == doctest::Approx(0.0));
    CHECK(*sp[2] == doctest::Approx(0.0));
    CHECK(*sp[3] == doctest::Approx(0.8));
  }
  SUBCASE("single nonzero component") {
    const auto sp = significance_profile({2.5, 0.0, 0.0, 0.0});
    CHECK(*sp[0] == doctest::Approx(1.0));
  }
  SUBCASE("all-zero is missing") {
    const auto sp = significance_profile({0.0, 0.0, 0.0, 0.0});
    for (const auto& v : sp) CHECK_FALSE(v.has_value());
  }
  SUBCASE("missing entries stay missing, the rest normalize to unit length") {
    std::array<std::optional<double>, 4> z;
    z[0] = 3.0;
    z[2] = 4.0;
    const auto sp = significance_profile(z);
    CHECK(*sp[0] == doctest::Approx(0.6));
    CHECK_FALSE(sp[1].has_value());
    CHECK(*sp[2] == doctest::Approx(0.8));
    double norm = 0.0;
    for (const auto& v : sp) {
      if (v) norm += *v * *v;
    }
    CHECK(norm == doctest::Approx(1.0).epsilon(1e-9));
  }
}
