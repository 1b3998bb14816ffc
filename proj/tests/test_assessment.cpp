#include <doctest.h>

#include <cmath>

#include "snsim/assessment.hpp"
#include "snsim/errors.hpp"
#include "snsim/karate.hpp"
#include "snsim/rng.hpp"

using namespace snsim;

namespace {

NetworkMetrics karate_metrics(std::uint64_t ensemble_seed = 11) {
  const auto karate = load_karate().network;
  std::vector<double> labels;
  for (NodeId i = 0; i < karate.node_count(); ++i) {
    labels.push_back(karate.attributes(i).features[0]);
  }
  EnsembleConfig ens;
  ens.samples = 50;
  ens.seed = ensemble_seed;
  return collect_metrics(karate, labels, ens);
}

NetworkMetrics all_missing_metrics(std::size_t n) {
  NetworkMetrics m;
  m.node_count = n;
  return m;  // optionals empty, distributions sample-free, sp missing
}

}  // namespace

TEST_CASE("kl distance") {
  const BinSpec two_bins{0.0, 2.0, 2};
  SUBCASE("identical samples are at distance zero") {
    const std::vector<double> s{0.5, 0.5, 1.5, 1.5, 1.5};
    CHECK(kl_distance(s, s, two_bins) == 0.0);
  }
  SUBCASE("point mass against uniform is ln 2") {
    const std::vector<double> sim{0.5, 0.5, 0.5, 0.5};
    const std::vector<double> target{0.5, 1.5};
    CHECK(std::abs(kl_distance(sim, target, two_bins) - std::log(2.0)) < 1e-3);
  }
  SUBCASE("empty sample sets are missing") {
    const std::vector<double> s{0.5};
    CHECK(kl_distance({}, s, two_bins) == 1.0);
    CHECK(kl_distance(s, {}, two_bins) == 1.0);
  }
  SUBCASE("result is clipped to [0,1]") {
    // Wildly separated point masses blow the raw divergence far past 1.
    const std::vector<double> sim(50, 0.25);
    const std::vector<double> target(50, 1.75);
    CHECK(kl_distance(sim, target, two_bins) == 1.0);
  }
}

TEST_CASE("scalar distance") {
  CHECK(scalar_distance(0.3, 0.3, 0.0, 1.0) == 0.0);
  CHECK(scalar_distance(-1.0, 1.0, -1.0, 1.0) == 1.0);
  CHECK(std::abs(scalar_distance(0.4156, 0.3156, -0.5, 1.0) - 0.0667) < 1e-4);
  SUBCASE("missing operands dominate") {
    CHECK(scalar_distance(std::nullopt, 0.5, 0.0, 1.0) == 1.0);
    CHECK(scalar_distance(0.5, std::nullopt, 0.0, 1.0) == 1.0);
  }
  SUBCASE("symmetry") {
    Rng rng(3);
    for (int round = 0; round < 50; ++round) {
      const double x = rng.uniform01() * 2.0 - 1.0;
      const double y = rng.uniform01() * 2.0 - 1.0;
      CHECK(scalar_distance(x, y, -1.0, 1.0) ==
            scalar_distance(y, x, -1.0, 1.0));
    }
  }
  SUBCASE("bad range is rejected") {
    CHECK_THROWS_AS(scalar_distance(0.1, 0.2, 1.0, 1.0), ValidationError);
  }
}

TEST_CASE("composite index") {
  SUBCASE("a network against itself scores zero everywhere") {
    const auto m = karate_metrics();
    const IndexReport r = composite_index(m, m);
    for (const auto& d : r.per_measure) {
      CHECK(d.value == 0.0);
      CHECK_FALSE(d.missing);
    }
    CHECK(r.combined_index == 0.0);
    CHECK(r.global_index == 0.0);
    CHECK(r.local_index == 0.0);
  }
  SUBCASE("all measures missing pins the index at one") {
    const auto a = all_missing_metrics(10);
    const auto b = all_missing_metrics(10);
    const IndexReport r = composite_index(a, b);
    for (const auto& d : r.per_measure) {
      CHECK(d.missing);
      CHECK(d.value == 1.0);
    }
    CHECK(r.combined_index == doctest::Approx(1.0).epsilon(1e-12));
  }
  SUBCASE("one unit distance under uniform weights contributes 0.1") {
    auto sim = karate_metrics();
    const auto target = karate_metrics();
    sim.assortativity.reset();  // exactly one missing measure
    const IndexReport r = composite_index(sim, target);
    CHECK(r.combined_index == doctest::Approx(0.1).epsilon(1e-12));
    CHECK(r.per_measure[2].missing);
  }
  SUBCASE("uniform weights give combined = (global + local) / 2") {
    const auto target = karate_metrics(11);
    const auto sim = karate_metrics(12);  // different ensemble -> small SP gaps
    const IndexReport r = composite_index(sim, target);
    CHECK(std::abs(r.combined_index -
                   0.5 * (r.global_index + r.local_index)) < 1e-12);
    CHECK(r.combined_index >= 0.0);
    CHECK(r.combined_index <= 1.0);
  }
  SUBCASE("zero-weight measures do not move the indexes") {
    auto sim = karate_metrics();
    const auto target = karate_metrics();
    sim.modularity = 0.9;  // distance only on the modularity slot
    std::array<double, kMeasureCount> w{};
    w[0] = 0.5;
    w[5] = 0.5;
    const IndexReport r = composite_index(sim, target, w);
    CHECK(r.combined_index == 0.0);
    const IndexReport uniform = composite_index(sim, target);
    CHECK(uniform.combined_index > 0.0);
  }
  SUBCASE("node count mismatch is rejected") {
    CHECK_THROWS_AS(
        composite_index(all_missing_metrics(3), all_missing_metrics(4)),
        ValidationError);
  }
  SUBCASE("weights must sum to one") {
    std::array<double, kMeasureCount> w{};
    w[0] = 0.4;
    CHECK_THROWS_AS(
        composite_index(all_missing_metrics(3), all_missing_metrics(3), w),
        ValidationError);
  }
}
