#include "snsim/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "snsim/errors.hpp"
#include "snsim/rng.hpp"

namespace snsim {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double clamp01(double v) { return std::clamp(v, 0.0, 1.0); }

// Bounded simulated binary crossover on one gene pair (bounds [0,1]).
void sbx_gene(double& x1, double& x2, double eta, Rng& rng) {
  constexpr double kEps = 1e-14;
  if (std::abs(x1 - x2) <= kEps) return;
  double lo = std::min(x1, x2);
  double hi = std::max(x1, x2);
  const double u = rng.uniform01();

  auto spread = [&](double beta) {
    const double alpha = 2.0 - std::pow(beta, -(eta + 1.0));
    if (u <= 1.0 / alpha) {
      return std::pow(u * alpha, 1.0 / (eta + 1.0));
    }
    return std::pow(1.0 / (2.0 - u * alpha), 1.0 / (eta + 1.0));
  };

  const double range = hi - lo;
  const double beta_lo = 1.0 + 2.0 * (lo - 0.0) / range;
  const double beta_hi = 1.0 + 2.0 * (1.0 - hi) / range;
  double c1 = 0.5 * ((lo + hi) - spread(beta_lo) * range);
  double c2 = 0.5 * ((lo + hi) + spread(beta_hi) * range);
  c1 = clamp01(c1);
  c2 = clamp01(c2);
  if (rng.uniform01() <= 0.5) std::swap(c1, c2);
  x1 = c1;
  x2 = c2;
}

// Bounded polynomial mutation on one gene (bounds [0,1]).
void polynomial_gene(double& x, double eta, Rng& rng) {
  const double u = rng.uniform01();
  const double mut_pow = 1.0 / (eta + 1.0);
  double delta;
  if (u < 0.5) {
    const double val = 2.0 * u + (1.0 - 2.0 * u) * std::pow(1.0 - x, eta + 1.0);
    delta = std::pow(val, mut_pow) - 1.0;
  } else {
    const double val =
        2.0 * (1.0 - u) + 2.0 * (u - 0.5) * std::pow(x, eta + 1.0);
    delta = 1.0 - std::pow(val, mut_pow);
  }
  x = clamp01(x + delta);
}

std::vector<double> first_feature_labels(const AttributedNetwork& net) {
  std::vector<double> labels;
  if (net.feature_count() == 0) return labels;
  labels.reserve(net.node_count());
  for (NodeId i = 0; i < net.node_count(); ++i) {
    labels.push_back(net.attributes(i).features[0]);
  }
  return labels;
}

// Shared core of evaluate_genome and the evolve objective: run the growth
// with the genome's preference data and take the best snapshot.
ObjectivePoint evaluate_against(const Genome& genome,
                                const SimulationConfig& sim_config,
                                std::span<const double> labels,
                                const NetworkMetrics& target_metrics,
                                const EnsembleConfig& ensemble) {
  genome.validate();
  SimulationConfig config = sim_config;
  if (!config.initial_attributes.empty() &&
      config.initial_attributes[0].feature_count() != genome.feature_count()) {
    throw ValidationError(
        "genome has " + std::to_string(genome.feature_count()) +
        " features, simulation configured for " +
        std::to_string(config.initial_attributes[0].feature_count()));
  }
  for (NodeAttributes& a : config.initial_attributes) {
    a.preference_signs = genome.signs;
    a.preference_weights = genome.weights;
  }
  const GrowthTrace trace = run_simulation(config);
  ObjectivePoint best{kInf, 0.0};
  for (const Snapshot& snap : trace.snapshots) {
    const NetworkMetrics sim_metrics =
        collect_metrics(snap.network, labels, ensemble);
    const IndexReport report = composite_index(sim_metrics, target_metrics);
    // Strict comparison keeps the earliest (cheapest) minimizing snapshot.
    if (report.combined_index < best.similarity) {
      best.similarity = report.combined_index;
      best.cost = static_cast<double>(snap.elapsed_cost);
    }
  }
  return best;
}

struct Individual {
  Genome genome;
  ObjectivePoint objectives;
  std::size_t rank = 0;
  double crowding = 0.0;
};

std::vector<ObjectivePoint> points_of(const std::vector<Individual>& pop) {
  std::vector<ObjectivePoint> pts;
  pts.reserve(pop.size());
  for (const auto& ind : pop) pts.push_back(ind.objectives);
  return pts;
}

void assign_rank_and_crowding(std::vector<Individual>& pop) {
  const auto pts = points_of(pop);
  const auto fronts = non_dominated_sort(pts);
  for (std::size_t r = 0; r < fronts.size(); ++r) {
    std::vector<ObjectivePoint> front_pts;
    front_pts.reserve(fronts[r].size());
    for (std::size_t idx : fronts[r]) front_pts.push_back(pts[idx]);
    const auto crowd = crowding_distance(front_pts);
    for (std::size_t k = 0; k < fronts[r].size(); ++k) {
      pop[fronts[r][k]].rank = r;
      pop[fronts[r][k]].crowding = crowd[k];
    }
  }
}

// Binary tournament on (rank asc, crowding desc); full ties keep the first
// candidate so selection stays deterministic.
const Individual& tournament(const std::vector<Individual>& pop, Rng& rng) {
  const auto& a = pop[rng.below(pop.size())];
  const auto& b = pop[rng.below(pop.size())];
  if (a.rank != b.rank) return a.rank < b.rank ? a : b;
  if (a.crowding != b.crowding) return a.crowding > b.crowding ? a : b;
  return a;
}

bool genome_less(const Genome& a, const Genome& b) {
  if (a.signs != b.signs) return a.signs < b.signs;
  return a.weights < b.weights;
}

}  // namespace

void Genome::validate() const {
  if (signs.size() != weights.size()) {
    throw ValidationError("genome sign/weight lengths differ");
  }
  for (int s : signs) {
    if (s != -1 && s != 1) {
      throw ValidationError("genome sign must be -1 or +1");
    }
  }
  for (double w : weights) {
    if (!std::isfinite(w) || w < 0.0 || w > 1.0) {
      throw ValidationError("genome weight outside [0,1]");
    }
  }
}

void NsgaParams::validate() const {
  if (population < 4 || population % 2 != 0) {
    throw ValidationError("population must be an even number >= 4");
  }
  if (generations < 1) {
    throw ValidationError("generations must be >= 1");
  }
  auto check_prob = [](double p, const char* name) {
    if (!std::isfinite(p) || p < 0.0 || p > 1.0) {
      throw ValidationError(std::string(name) + " must lie in [0,1]");
    }
  };
  check_prob(crossover_prob, "crossover probability");
  if (mutation_prob) check_prob(*mutation_prob, "mutation probability");
  if (!std::isfinite(sbx_eta) || sbx_eta <= 0.0 || !std::isfinite(mutation_eta) ||
      mutation_eta <= 0.0) {
    throw ValidationError("distribution indexes must be > 0");
  }
}

double NsgaParams::effective_mutation_prob(std::size_t feature_count) const {
  if (mutation_prob) return *mutation_prob;
  if (feature_count == 0) return 0.0;
  return 1.0 / (2.0 * static_cast<double>(feature_count));
}

bool dominates(const ObjectivePoint& a, const ObjectivePoint& b) {
  if (a.similarity > b.similarity || a.cost > b.cost) return false;
  return a.similarity < b.similarity || a.cost < b.cost;
}

std::vector<std::vector<std::size_t>> non_dominated_sort(
    std::span<const ObjectivePoint> points) {
  const std::size_t n = points.size();
  std::vector<std::vector<std::size_t>> dominated(n);
  std::vector<std::size_t> dominator_count(n, 0);
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = p + 1; q < n; ++q) {
      if (dominates(points[p], points[q])) {
        dominated[p].push_back(q);
        ++dominator_count[q];
      } else if (dominates(points[q], points[p])) {
        dominated[q].push_back(p);
        ++dominator_count[p];
      }
    }
  }
  std::vector<std::vector<std::size_t>> fronts;
  std::vector<std::size_t> current;
  for (std::size_t p = 0; p < n; ++p) {
    if (dominator_count[p] == 0) current.push_back(p);
  }
  while (!current.empty()) {
    fronts.push_back(current);
    std::vector<std::size_t> next;
    for (std::size_t p : fronts.back()) {
      for (std::size_t q : dominated[p]) {
        if (--dominator_count[q] == 0) next.push_back(q);
      }
    }
    std::sort(next.begin(), next.end());
    current = std::move(next);
  }
  return fronts;
}

std::vector<double> crowding_distance(std::span<const ObjectivePoint> front) {
  const std::size_t n = front.size();
  std::vector<double> dist(n, 0.0);
  if (n == 0) return dist;
  if (n <= 2) {
    std::fill(dist.begin(), dist.end(), kInf);
    return dist;
  }
  auto accumulate = [&](auto value_of) {
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      const double va = value_of(front[a]);
      const double vb = value_of(front[b]);
      if (va != vb) return va < vb;
      return a < b;
    });
    dist[order.front()] = kInf;
    dist[order.back()] = kInf;
    const double span =
        value_of(front[order.back()]) - value_of(front[order.front()]);
    if (span <= 0.0) return;
    for (std::size_t k = 1; k + 1 < n; ++k) {
      if (dist[order[k]] == kInf) continue;
      dist[order[k]] += (value_of(front[order[k + 1]]) -
                         value_of(front[order[k - 1]])) /
                        span;
    }
  };
  accumulate([](const ObjectivePoint& p) { return p.similarity; });
  accumulate([](const ObjectivePoint& p) { return p.cost; });
  return dist;
}

ObjectivePoint evaluate_genome(const Genome& genome,
                               const AttributedNetwork& target,
                               const SimulationConfig& sim_config,
                               const EnsembleConfig& ensemble) {
  const std::vector<double> labels = first_feature_labels(target);
  const NetworkMetrics target_metrics =
      collect_metrics(target, labels, ensemble);
  return evaluate_against(genome, sim_config, labels, target_metrics,
                          ensemble);
}

EvolveResult evolve(std::size_t feature_count, const ObjectiveFn& objective,
                    const NsgaParams& params) {
  params.validate();
  Rng rng(params.seed);
  const double pm = params.effective_mutation_prob(feature_count);

  auto random_genome = [&]() {
    Genome g;
    g.signs.reserve(feature_count);
    g.weights.reserve(feature_count);
    for (std::size_t f = 0; f < feature_count; ++f) {
      g.signs.push_back(rng.sign());
    }
    for (std::size_t f = 0; f < feature_count; ++f) {
      g.weights.push_back(rng.uniform01());
    }
    return g;
  };

  auto mutate = [&](Genome& g) {
    for (std::size_t f = 0; f < feature_count; ++f) {
      if (rng.uniform01() < pm) {
        polynomial_gene(g.weights[f], params.mutation_eta, rng);
      }
    }
    for (std::size_t f = 0; f < feature_count; ++f) {
      if (rng.uniform01() < pm) g.signs[f] = -g.signs[f];
    }
  };

  auto crossover = [&](const Genome& p1, const Genome& p2) {
    std::pair<Genome, Genome> children{p1, p2};
    if (rng.uniform01() > params.crossover_prob) return children;
    for (std::size_t f = 0; f < feature_count; ++f) {
      if (rng.uniform01() <= 0.5) {
        sbx_gene(children.first.weights[f], children.second.weights[f],
                 params.sbx_eta, rng);
      }
    }
    for (std::size_t f = 0; f < feature_count; ++f) {
      if (rng.uniform01() <= 0.5) {
        std::swap(children.first.signs[f], children.second.signs[f]);
      }
    }
    return children;
  };

  std::vector<Individual> pop(params.population);
  for (auto& ind : pop) {
    ind.genome = random_genome();
    ind.objectives = objective(ind.genome);
  }

  EvolveResult result;
  for (std::size_t gen = 1; gen <= params.generations; ++gen) {
    assign_rank_and_crowding(pop);

    std::vector<Individual> offspring;
    offspring.reserve(params.population);
    while (offspring.size() < params.population) {
      const Genome& p1 = tournament(pop, rng).genome;
      const Genome& p2 = tournament(pop, rng).genome;
      auto [c1, c2] = crossover(p1, p2);
      mutate(c1);
      mutate(c2);
      c1.validate();
      c2.validate();
      Individual i1;
      i1.genome = std::move(c1);
      i1.objectives = objective(i1.genome);
      offspring.push_back(std::move(i1));
      if (offspring.size() < params.population) {
        Individual i2;
        i2.genome = std::move(c2);
        i2.objectives = objective(i2.genome);
        offspring.push_back(std::move(i2));
      }
    }

    // (mu + lambda) survival: fill by fronts, split the last front by
    // crowding (ties by combined-population index, keeping this stable).
    std::vector<Individual> combined = std::move(pop);
    combined.insert(combined.end(),
                    std::make_move_iterator(offspring.begin()),
                    std::make_move_iterator(offspring.end()));
    const auto pts = points_of(combined);
    const auto fronts = non_dominated_sort(pts);
    std::vector<Individual> next;
    next.reserve(params.population);
    for (const auto& front : fronts) {
      if (next.size() == params.population) break;
      if (next.size() + front.size() <= params.population) {
        for (std::size_t idx : front) next.push_back(std::move(combined[idx]));
        continue;
      }
      std::vector<ObjectivePoint> front_pts;
      front_pts.reserve(front.size());
      for (std::size_t idx : front) front_pts.push_back(pts[idx]);
      const auto crowd = crowding_distance(front_pts);
      std::vector<std::size_t> order(front.size());
      for (std::size_t k = 0; k < front.size(); ++k) order[k] = k;
      std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (crowd[a] != crowd[b]) return crowd[a] > crowd[b];
        return front[a] < front[b];
      });
      for (std::size_t k = 0; next.size() < params.population; ++k) {
        next.push_back(std::move(combined[front[order[k]]]));
      }
      break;
    }
    pop = std::move(next);

    GenerationStat stat;
    stat.generation = gen;
    stat.best_similarity = kInf;
    for (const auto& ind : pop) {
      stat.best_similarity = std::min(stat.best_similarity,
                                      ind.objectives.similarity);
    }
    stat.front_size = non_dominated_sort(points_of(pop)).front().size();
    result.history.push_back(stat);
  }

  const auto final_fronts = non_dominated_sort(points_of(pop));
  for (std::size_t idx : final_fronts.front()) {
    result.front.push_back(FrontMember{pop[idx].genome, pop[idx].objectives});
  }
  std::sort(result.front.begin(), result.front.end(),
            [](const FrontMember& a, const FrontMember& b) {
              if (a.objectives.similarity != b.objectives.similarity) {
                return a.objectives.similarity < b.objectives.similarity;
              }
              if (a.objectives.cost != b.objectives.cost) {
                return a.objectives.cost < b.objectives.cost;
              }
              return genome_less(a.genome, b.genome);
            });
  return result;
}

EvolveResult evolve(const AttributedNetwork& target,
                    const SimulationConfig& sim_config,
                    const EnsembleConfig& ensemble, const NsgaParams& params) {
  const std::size_t feature_count =
      sim_config.initial_attributes.empty()
          ? 0
          : sim_config.initial_attributes[0].feature_count();
  // Target metrics are fixed for the whole search; bind them once.
  const std::vector<double> labels = first_feature_labels(target);
  const NetworkMetrics target_metrics =
      collect_metrics(target, labels, ensemble);
  ObjectiveFn objective = [&](const Genome& genome) {
    return evaluate_against(genome, sim_config, labels, target_metrics,
                            ensemble);
  };
  return evolve(feature_count, objective, params);
}

}  // namespace snsim
