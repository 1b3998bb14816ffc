#include <doctest.h>

#include <cmath>
#include <map>

#include "snsim/errors.hpp"
#include "snsim/graph_io.hpp"
#include "snsim/karate.hpp"
#include "snsim/metrics_global.hpp"
#include "snsim/rng.hpp"

using namespace snsim;

namespace {

AttributedNetwork complete(std::size_t n) {
  AttributedNetwork net{n};
  for (NodeId i = 0; i < n; ++i) {
    for (NodeId j = i + 1; j < n; ++j) net.add_edge(i, j);
  }
  return net;
}

// Independent Newman Q: direct double sum over node pairs,
// Q = (1/2m) * sum_ij [A_ij - k_i k_j / 2m] delta(c_i, c_j).
double newman_q_reference(const AttributedNetwork& net,
                          const std::vector<int>& community) {
  const double two_m = 2.0 * static_cast<double>(net.edge_count());
  double q = 0.0;
  for (NodeId i = 0; i < net.node_count(); ++i) {
    for (NodeId j = 0; j < net.node_count(); ++j) {
      if (community[i] != community[j]) continue;
      const double a = (i != j && net.has_edge(i, j)) ? 1.0 : 0.0;
      q += a - static_cast<double>(net.degree(i)) *
                   static_cast<double>(net.degree(j)) / two_m;
    }
  }
  return q / two_m;
}

AttributedNetwork random_graph(std::size_t n, double p, Rng& rng) {
  AttributedNetwork net{n};
  for (NodeId i = 0; i < n; ++i) {
    for (NodeId j = i + 1; j < n; ++j) {
      if (rng.uniform01() < p) net.add_edge(i, j);
    }
  }
  return net;
}

}  // namespace

TEST_CASE("density") {
  const auto karate = load_karate().network;
  CHECK(std::abs(density(karate) - 0.1390) < 1e-4);
  CHECK(density(AttributedNetwork{5}) == 0.0);
  CHECK(density(complete(4)) == 1.0);
  CHECK_THROWS_AS(density(AttributedNetwork{1}), ValidationError);
}

TEST_CASE("modularity") {
  SUBCASE("karate lands near the published partition quality") {
    const auto karate = load_karate().network;
    const auto result = modularity(karate);
    REQUIRE(result.has_value());
    CHECK(result->value > 0.4156 - 0.05);
    CHECK(result->value < 0.4156 + 0.05);
  }
  SUBCASE("two disjoint triangles split perfectly") {
    AttributedNetwork net{6};
    net.add_edge(0, 1);
    net.add_edge(1, 2);
    net.add_edge(0, 2);
    net.add_edge(3, 4);
    net.add_edge(4, 5);
    net.add_edge(3, 5);
    const auto result = modularity(net);
    REQUIRE(result.has_value());
    CHECK(result->value == doctest::Approx(0.5));
    CHECK(result->community[0] == result->community[1]);
    CHECK(result->community[0] != result->community[3]);
  }
  SUBCASE("a complete graph collapses into one community") {
    const auto result = modularity(complete(5));
    REQUIRE(result.has_value());
    CHECK(result->value == doctest::Approx(0.0));
  }
  SUBCASE("zero edges yield a missing value") {
    CHECK_FALSE(modularity(AttributedNetwork{4}).has_value());
  }
  SUBCASE("reported value equals the Q of the reported partition") {
    Rng rng(77);
    for (int round = 0; round < 20; ++round) {
      const auto net = random_graph(3 + rng.below(10), 0.4, rng);
      if (net.edge_count() == 0) continue;
      const auto result = modularity(net);
      REQUIRE(result.has_value());
      CHECK(result->value ==
            doctest::Approx(newman_q_reference(net, result->community))
                .epsilon(1e-12));
    }
  }
}

TEST_CASE("degree assortativity") {
  SUBCASE("karate matches the published coefficient") {
    const auto karate = load_karate().network;
    const auto r = degree_assortativity(karate);
    REQUIRE(r.has_value());
    CHECK(std::abs(*r - (-0.4756)) < 1e-3);
  }
  SUBCASE("a star is perfectly disassortative") {
    AttributedNetwork star{5};
    for (NodeId leaf = 1; leaf < 5; ++leaf) star.add_edge(0, leaf);
    const auto r = degree_assortativity(star);
    REQUIRE(r.has_value());
    CHECK(*r == doctest::Approx(-1.0));
  }
  SUBCASE("a cycle has no degree variance") {
    AttributedNetwork cycle{4};
    cycle.add_edge(0, 1);
    cycle.add_edge(1, 2);
    cycle.add_edge(2, 3);
    cycle.add_edge(0, 3);
    CHECK_FALSE(degree_assortativity(cycle).has_value());
  }
  SUBCASE("zero edges are missing") {
    CHECK_FALSE(degree_assortativity(AttributedNetwork{3}).has_value());
  }
}

TEST_CASE("degree distribution") {
  SUBCASE("karate summary") {
    const auto d = degree_distribution(load_karate().network);
    CHECK(std::abs(d.summary.mean - 4.59) < 0.01);
    CHECK(std::abs(d.summary.stddev - 3.82) < 0.01);
    CHECK(d.summary.max == 17.0);
    CHECK(d.summary.min == 1.0);
    CHECK(d.summary.q25 == 2.0);
    CHECK(d.summary.q75 == 5.0);
  }
  SUBCASE("empty graph is all zeros") {
    const auto d = degree_distribution(AttributedNetwork{3});
    CHECK(d.summary.mean == 0.0);
    CHECK(d.summary.max == 0.0);
  }
  SUBCASE("complete graph is constant") {
    const auto d = degree_distribution(complete(4));
    for (double v : d.samples) CHECK(v == 3.0);
  }
  SUBCASE("mean is exactly 2E/N") {
    Rng rng(31);
    for (int round = 0; round < 10; ++round) {
      const auto net = random_graph(2 + rng.below(12), 0.5, rng);
      const auto d = degree_distribution(net);
      CHECK(d.summary.mean ==
            doctest::Approx(2.0 * static_cast<double>(net.edge_count()) /
                            static_cast<double>(net.node_count()))
                .epsilon(1e-12));
    }
  }
}

TEST_CASE("shortest path distribution") {
  SUBCASE("karate summary") {
    const auto d = shortest_path_distribution(load_karate().network);
    CHECK(d.samples.size() == 561);
    CHECK(std::abs(d.summary.mean - 2.41) < 0.01);
    CHECK(std::abs(d.summary.stddev - 0.93) < 0.01);
    CHECK(d.summary.max == 5.0);
    CHECK(d.summary.min == 1.0);
  }
  SUBCASE("path graph") {
    const auto path = load_network("0 1\n1 2").network;
    const auto d = shortest_path_distribution(path);
    REQUIRE(d.samples.size() == 3);
    CHECK(d.samples[0] == 1.0);  // (0,1)
    CHECK(d.samples[1] == 2.0);  // (0,2)
    CHECK(d.samples[2] == 1.0);  // (1,2)
  }
  SUBCASE("unreachable pairs take the cap N") {
    const auto d = shortest_path_distribution(AttributedNetwork{2});
    REQUIRE(d.samples.size() == 1);
    CHECK(d.samples[0] == 2.0);
  }
  SUBCASE("samples lie in [1, N]") {
    Rng rng(41);
    for (int round = 0; round < 10; ++round) {
      const std::size_t n = 2 + rng.below(10);
      const auto net = random_graph(n, 0.3, rng);
      for (double v : shortest_path_distribution(net).samples) {
        CHECK(v >= 1.0);
        CHECK(v <= static_cast<double>(n));
      }
    }
  }
}

TEST_CASE("density rises strictly along a growing trace") {
  AttributedNetwork net{6};
  double last = density(net);
  Rng rng(3);
  while (!net.saturated()) {
    // add one random missing edge
    NodeId i = 0, j = 0;
    do {
      i = static_cast<NodeId>(rng.below(6));
      j = static_cast<NodeId>(rng.below(6));
    } while (i == j || net.has_edge(i, j));
    net.add_edge(i, j);
    const double now = density(net);
    CHECK(now > last);
    last = now;
  }
  CHECK(last == 1.0);
}
