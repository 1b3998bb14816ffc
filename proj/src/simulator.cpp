#include "snsim/simulator.hpp"

#include <chrono>
#include <cmath>
#include <string>

#include "snsim/errors.hpp"

namespace snsim {

void SimulationConfig::validate() const {
  if (iterations < 1) {
    throw ValidationError("iterations must be >= 1");
  }
  if (!std::isfinite(edge_rate) || edge_rate <= 0.0 || edge_rate > 1.0) {
    throw ValidationError("edge rate must lie in (0,1]");
  }
  if (node_count() < 2) {
    throw ValidationError("simulation needs at least 2 nodes, got " +
                          std::to_string(node_count()));
  }
  scoring.validate();
  // AttributedNetwork's constructor re-checks per-node consistency.
}

std::size_t edges_per_iteration(std::size_t n, double rate) {
  if (n < 2) {
    throw ValidationError("edges_per_iteration needs n >= 2, got " +
                          std::to_string(n));
  }
  if (!std::isfinite(rate) || rate <= 0.0 || rate > 1.0) {
    throw ValidationError("edge rate must lie in (0,1]");
  }
  const double pairs = static_cast<double>(n) * static_cast<double>(n - 1) / 2.0;
  const auto rounded = static_cast<std::size_t>(std::floor(rate * pairs + 0.5));
  return rounded < 1 ? 1 : rounded;
}

Simulator::Simulator(SimulationConfig config)
    : config_(std::move(config)),
      state_(config_.initial_attributes),
      edges_per_step_(0) {
  config_.validate();
  edges_per_step_ = edges_per_iteration(state_.node_count(), config_.edge_rate);
}

Simulator::Simulator(SimulationConfig config, AttributedNetwork start)
    : config_(std::move(config)), state_(std::move(start)), edges_per_step_(0) {
  config_.validate();
  if (state_.node_count() != config_.node_count()) {
    throw ValidationError("start network has " +
                          std::to_string(state_.node_count()) +
                          " nodes, config declares " +
                          std::to_string(config_.node_count()));
  }
  edges_per_step_ = edges_per_iteration(state_.node_count(), config_.edge_rate);
}

Snapshot Simulator::step() {
  const auto t0 = std::chrono::steady_clock::now();
  ++iteration_;
  bool saturated = state_.saturated();
  if (!saturated) {
    // Every unconnected pair is scored once per iteration.
    cost_ += state_.max_edge_count() - state_.edge_count();
    const auto ranked =
        rank_unconnected_pairs(state_, config_.scoring, edges_per_step_);
    for (const ScoredPair& p : ranked) {
      state_.add_edge(p.i, p.j);
    }
  }
  wall_ += std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
               .count();
  return Snapshot{iteration_, state_, cost_, wall_, saturated};
}

GrowthTrace Simulator::run() {
  GrowthTrace trace;
  trace.config = config_;
  trace.snapshots.reserve(config_.iterations);
  for (std::size_t k = 0; k < config_.iterations; ++k) {
    if (config_.stop_at_saturation && state_.saturated()) break;
    trace.snapshots.push_back(step());
  }
  return trace;
}

GrowthTrace run_simulation(const SimulationConfig& config) {
  Simulator sim(config);
  return sim.run();
}

}  // namespace snsim
