#include "snsim/experiment.hpp"

#include <algorithm>
#include <set>
#include <string>

#include <json.hpp>

#include "snsim/errors.hpp"
#include "snsim/karate.hpp"
#include "snsim/report_io.hpp"
#include "snsim/rng.hpp"

namespace snsim {

using nlohmann::json;

namespace {

void reject_unknown_keys(const json& obj, const std::set<std::string>& known,
                         const std::string& where) {
  for (const auto& [key, _] : obj.items()) {
    if (!known.count(key)) {
      throw ValidationError("unknown config key '" + key + "' in " + where);
    }
  }
}

template <typename T>
T get_or(const json& obj, const std::string& key, T fallback) {
  if (!obj.contains(key) || obj.at(key).is_null()) return fallback;
  try {
    return obj.at(key).get<T>();
  } catch (const json::exception&) {
    throw ValidationError("config key '" + key + "' has the wrong type");
  }
}

std::optional<std::uint64_t> get_opt_u64(const json& obj,
                                         const std::string& key) {
  if (!obj.contains(key) || obj.at(key).is_null()) return std::nullopt;
  try {
    return obj.at(key).get<std::uint64_t>();
  } catch (const json::exception&) {
    throw ValidationError("config key '" + key + "' has the wrong type");
  }
}

ScoringParams parse_scoring(const json& obj) {
  reject_unknown_keys(obj,
                      {"q", "r", "c", "m", "tau", "gamma", "max_path_length",
                       "feature_mode"},
                      "sim.scoring");
  ScoringParams p;
  p.feature_weight = get_or(obj, "q", p.feature_weight);
  p.popularity_weight = get_or(obj, "r", p.popularity_weight);
  p.path_weight = get_or(obj, "c", p.path_weight);
  p.attachment_factor = get_or(obj, "m", p.attachment_factor);
  p.tau = get_or(obj, "tau", p.tau);
  p.gamma = get_or(obj, "gamma", p.gamma);
  p.max_path_length = get_or<std::size_t>(obj, "max_path_length",
                                          p.gamma.size() + 1);
  const std::string mode = get_or<std::string>(obj, "feature_mode", "literal");
  if (mode == "literal") {
    p.feature_mode = FeatureMode::literal;
  } else if (mode == "similarity") {
    p.feature_mode = FeatureMode::similarity;
  } else {
    throw ValidationError("feature_mode must be 'literal' or 'similarity'");
  }
  p.validate();
  return p;
}

std::vector<double> synthesize_binary_column(std::size_t n,
                                             std::uint64_t seed) {
  Rng rng(seed);
  std::vector<double> column;
  column.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    column.push_back(static_cast<double>(rng.below(2)));
  }
  return column;
}

}  // namespace

std::string_view variant_name(Variant v) {
  switch (v) {
    case Variant::zero: return "zero";
    case Variant::real: return "real";
    case Variant::simulated: return "simulated";
    case Variant::hybrid: return "hybrid";
  }
  return "unknown";
}

Variant variant_from_name(std::string_view name) {
  if (name == "zero") return Variant::zero;
  if (name == "real") return Variant::real;
  if (name == "simulated") return Variant::simulated;
  if (name == "hybrid") return Variant::hybrid;
  throw ValidationError("unknown variant '" + std::string(name) + "'");
}

void ExperimentConfig::resolve_seeds() {
  if (!feature_seed) {
    feature_seed = derive_seed(seed, kStreamFeatureSynthesis, 0);
  }
  if (!ensemble_seed) {
    ensemble_seed = derive_seed(seed, kStreamEnsemble, 0);
  }
  if (!optimizer_seed) {
    optimizer_seed = derive_seed(seed, kStreamOptimizer, 0);
  }
  ensemble.seed = *ensemble_seed;
}

ExperimentConfig parse_experiment_config(const std::string& json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!root.is_object()) {
    throw ValidationError("config root must be a JSON object");
  }
  reject_unknown_keys(root,
                      {"target", "variants", "sim", "nsga", "ensemble",
                       "weights", "output_dir", "seed", "feature_seed",
                       "ensemble_seed", "optimizer_seed"},
                      "config");

  ExperimentConfig cfg;
  if (root.contains("target")) {
    const json& t = root.at("target");
    if (t.is_string()) {
      if (t.get<std::string>() != "karate") {
        cfg.target.bundled_karate = false;
        cfg.target.edges_path = t.get<std::string>();
      }
    } else if (t.is_object()) {
      reject_unknown_keys(t, {"edges", "attributes"}, "target");
      cfg.target.bundled_karate = false;
      cfg.target.edges_path = get_or<std::string>(t, "edges", "");
      if (cfg.target.edges_path.empty()) {
        throw ValidationError("target.edges must name an edge list file");
      }
      if (t.contains("attributes") && !t.at("attributes").is_null()) {
        cfg.target.attributes_path = t.at("attributes").get<std::string>();
      }
    } else {
      throw ValidationError("target must be 'karate' or an object");
    }
  }

  if (root.contains("variants")) {
    cfg.variants.clear();
    for (const auto& name : root.at("variants")) {
      cfg.variants.push_back(variant_from_name(name.get<std::string>()));
    }
    if (cfg.variants.empty()) {
      throw ValidationError("variants must not be empty");
    }
  }

  cfg.seed = get_or<std::uint64_t>(root, "seed", 0);
  cfg.output_dir = get_or<std::string>(root, "output_dir", "");
  cfg.feature_seed = get_opt_u64(root, "feature_seed");
  cfg.ensemble_seed = get_opt_u64(root, "ensemble_seed");
  cfg.optimizer_seed = get_opt_u64(root, "optimizer_seed");

  if (root.contains("sim")) {
    const json& s = root.at("sim");
    reject_unknown_keys(
        s, {"iterations", "edge_rate", "stop_at_saturation", "scoring", "sdna"},
        "sim");
    cfg.sim.iterations = get_or<std::size_t>(s, "iterations", cfg.sim.iterations);
    cfg.sim.edge_rate = get_or(s, "edge_rate", cfg.sim.edge_rate);
    cfg.sim.stop_at_saturation =
        get_or(s, "stop_at_saturation", cfg.sim.stop_at_saturation);
    if (s.contains("scoring")) cfg.sim.scoring = parse_scoring(s.at("scoring"));
    if (s.contains("sdna") && !s.at("sdna").is_null()) {
      const json& d = s.at("sdna");
      reject_unknown_keys(d, {"signs", "weights"}, "sim.sdna");
      Genome g;
      g.signs = get_or(d, "signs", std::vector<int>{});
      g.weights = get_or(d, "weights", std::vector<double>{});
      g.validate();
      cfg.sdna = std::move(g);
    }
  }

  if (root.contains("nsga")) {
    const json& g = root.at("nsga");
    reject_unknown_keys(g,
                        {"population", "generations", "crossover_prob",
                         "sbx_eta", "mutation_eta", "mutation_prob"},
                        "nsga");
    cfg.nsga.population = get_or<std::size_t>(g, "population", cfg.nsga.population);
    cfg.nsga.generations =
        get_or<std::size_t>(g, "generations", cfg.nsga.generations);
    cfg.nsga.crossover_prob =
        get_or(g, "crossover_prob", cfg.nsga.crossover_prob);
    cfg.nsga.sbx_eta = get_or(g, "sbx_eta", cfg.nsga.sbx_eta);
    cfg.nsga.mutation_eta = get_or(g, "mutation_eta", cfg.nsga.mutation_eta);
    if (g.contains("mutation_prob") && !g.at("mutation_prob").is_null()) {
      cfg.nsga.mutation_prob = g.at("mutation_prob").get<double>();
    }
    cfg.nsga.validate();
  }

  if (root.contains("ensemble")) {
    const json& e = root.at("ensemble");
    reject_unknown_keys(e, {"samples"}, "ensemble");
    cfg.ensemble.samples =
        get_or<std::size_t>(e, "samples", cfg.ensemble.samples);
    cfg.ensemble.validate();
  }

  if (root.contains("weights")) {
    const auto w = root.at("weights").get<std::vector<double>>();
    if (w.size() != kMeasureCount) {
      throw ValidationError("weights must have exactly 10 entries");
    }
    std::copy(w.begin(), w.end(), cfg.weights.begin());
  }
  return cfg;
}

LoadedNetwork load_target(const TargetSpec& spec) {
  if (spec.bundled_karate) return load_karate();
  const std::string edges = read_text_file(spec.edges_path);
  if (spec.attributes_path) {
    const std::string attrs = read_text_file(*spec.attributes_path);
    return load_network(edges, attrs);
  }
  return load_network(edges);
}

std::vector<double> binary_labels(const AttributedNetwork& net) {
  std::vector<double> labels;
  if (net.feature_count() == 0) return labels;
  labels.reserve(net.node_count());
  for (NodeId i = 0; i < net.node_count(); ++i) {
    const double v = net.attributes(i).features[0];
    if (v != 0.0 && v != 1.0) return {};
    labels.push_back(v);
  }
  return labels;
}

std::vector<NodeAttributes> variant_attributes(Variant v,
                                               const AttributedNetwork& target,
                                               std::uint64_t feature_seed) {
  const std::size_t n = target.node_count();
  std::vector<std::vector<double>> columns;
  auto real_columns = [&]() {
    if (target.feature_count() == 0) {
      throw ValidationError(std::string(variant_name(v)) +
                            " variant needs a target attribute table");
    }
    for (std::size_t f = 0; f < target.feature_count(); ++f) {
      std::vector<double> col(n);
      for (NodeId i = 0; i < n; ++i) col[i] = target.attributes(i).features[f];
      columns.push_back(std::move(col));
    }
  };
  switch (v) {
    case Variant::zero:
      break;
    case Variant::real:
      real_columns();
      break;
    case Variant::simulated:
      columns.push_back(synthesize_binary_column(n, feature_seed));
      break;
    case Variant::hybrid:
      real_columns();
      columns.push_back(synthesize_binary_column(n, feature_seed));
      break;
  }
  std::vector<NodeAttributes> attrs(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<double> features;
    features.reserve(columns.size());
    for (const auto& col : columns) features.push_back(col[i]);
    attrs[i] = NodeAttributes::from_features(std::move(features));
  }
  return attrs;
}

ExperimentReport run_experiment(const ExperimentConfig& config) {
  ExperimentReport report;
  report.config = config;
  report.config.resolve_seeds();
  const ExperimentConfig& cfg = report.config;

  report.target = load_target(cfg.target);
  const AttributedNetwork& target = report.target.network;

  // Fail fast on configuration errors before any simulation work.
  for (Variant v : cfg.variants) {
    if ((v == Variant::real || v == Variant::hybrid) &&
        target.feature_count() == 0) {
      throw ValidationError(std::string(variant_name(v)) +
                            " variant needs a target attribute table");
    }
  }

  const std::vector<double> labels = binary_labels(target);
  const NetworkMetrics target_metrics =
      collect_metrics(target, labels, cfg.ensemble);

  for (Variant v : cfg.variants) {
    VariantRun run;
    run.variant = v;

    SimulationConfig sim = cfg.sim;
    sim.seed = cfg.seed;
    sim.initial_attributes = variant_attributes(v, target, *cfg.feature_seed);
    run.feature_count = sim.initial_attributes.empty()
                            ? 0
                            : sim.initial_attributes[0].feature_count();

    if (run.feature_count > 0) {
      NsgaParams nsga = cfg.nsga;
      // Keyed by the variant itself, so a single-variant run reproduces the
      // same search as the full experiment.
      nsga.seed = derive_seed(*cfg.optimizer_seed, 0,
                              static_cast<std::uint64_t>(v));
      EvolveResult evolved = evolve(target, sim, cfg.ensemble, nsga);
      run.optimized = true;
      run.front = std::move(evolved.front);
      run.history = std::move(evolved.history);
      // Best similarity first; ties already broken by cost then genome.
      run.genome = run.front.front().genome;
      for (NodeAttributes& a : sim.initial_attributes) {
        a.preference_signs = run.genome.signs;
        a.preference_weights = run.genome.weights;
      }
    }

    run.trace = run_simulation(sim);
    for (const Snapshot& snap : run.trace.snapshots) {
      const NetworkMetrics sim_metrics =
          collect_metrics(snap.network, labels, cfg.ensemble);
      run.series.push_back(
          composite_index(sim_metrics, target_metrics, cfg.weights));
    }
    ObjectivePoint best{2.0, 0.0};
    for (std::size_t k = 0; k < run.series.size(); ++k) {
      if (run.series[k].combined_index < best.similarity) {
        best.similarity = run.series[k].combined_index;
        best.cost =
            static_cast<double>(run.trace.snapshots[k].elapsed_cost);
      }
    }
    run.objectives = best;

    report.variants.push_back(std::move(run));
  }

  if (!cfg.output_dir.empty()) {
    write_report(report, cfg.output_dir, cfg.force);
  }
  return report;
}

ExperimentReport run_single_trace(const ExperimentConfig& config, Variant v) {
  ExperimentReport report;
  report.config = config;
  report.config.resolve_seeds();
  const ExperimentConfig& cfg = report.config;
  report.target = load_target(cfg.target);

  VariantRun run;
  run.variant = v;
  SimulationConfig sim = cfg.sim;
  sim.seed = cfg.seed;
  sim.initial_attributes =
      variant_attributes(v, report.target.network, *cfg.feature_seed);
  run.feature_count = sim.initial_attributes.empty()
                          ? 0
                          : sim.initial_attributes[0].feature_count();
  if (cfg.sdna) {
    if (cfg.sdna->feature_count() != run.feature_count) {
      throw ValidationError("sdna covers " +
                            std::to_string(cfg.sdna->feature_count()) +
                            " features, variant has " +
                            std::to_string(run.feature_count));
    }
    run.genome = *cfg.sdna;
    for (NodeAttributes& a : sim.initial_attributes) {
      a.preference_signs = run.genome.signs;
      a.preference_weights = run.genome.weights;
    }
  }
  run.trace = run_simulation(sim);
  report.variants.push_back(std::move(run));

  if (!cfg.output_dir.empty()) {
    write_report(report, cfg.output_dir, cfg.force);
  }
  return report;
}

ExperimentReport run_optimize(const ExperimentConfig& config, Variant v) {
  ExperimentReport report;
  report.config = config;
  report.config.resolve_seeds();
  const ExperimentConfig& cfg = report.config;
  report.target = load_target(cfg.target);
  const AttributedNetwork& target = report.target.network;

  VariantRun run;
  run.variant = v;
  SimulationConfig sim = cfg.sim;
  sim.seed = cfg.seed;
  sim.initial_attributes = variant_attributes(v, target, *cfg.feature_seed);
  run.feature_count = sim.initial_attributes.empty()
                          ? 0
                          : sim.initial_attributes[0].feature_count();
  if (run.feature_count == 0) {
    throw ValidationError(
        "the zero-feature variant has no preference data to optimize");
  }
  NsgaParams nsga = cfg.nsga;
  nsga.seed =
      derive_seed(*cfg.optimizer_seed, 0, static_cast<std::uint64_t>(v));
  EvolveResult evolved = evolve(target, sim, cfg.ensemble, nsga);
  run.optimized = true;
  run.front = std::move(evolved.front);
  run.history = std::move(evolved.history);
  run.genome = run.front.front().genome;
  run.objectives = run.front.front().objectives;
  report.variants.push_back(std::move(run));

  if (!cfg.output_dir.empty()) {
    write_report(report, cfg.output_dir, cfg.force);
  }
  return report;
}

IndexReport assess_networks(const AttributedNetwork& sim,
                            const AttributedNetwork& target,
                            const EnsembleConfig& ensemble) {
  if (sim.node_count() != target.node_count()) {
    throw ValidationError("node count mismatch: simulated " +
                          std::to_string(sim.node_count()) + " vs target " +
                          std::to_string(target.node_count()));
  }
  const std::vector<double> labels = binary_labels(target);
  const NetworkMetrics sim_metrics = collect_metrics(sim, labels, ensemble);
  const NetworkMetrics target_metrics =
      collect_metrics(target, labels, ensemble);
  return composite_index(sim_metrics, target_metrics);
}

IndexReport assess_pair(const std::string& sim_path,
                        const std::string& target_path,
                        const std::optional<std::string>& target_attributes,
                        const EnsembleConfig& ensemble) {
  const LoadedNetwork sim = load_network(read_text_file(sim_path));
  TargetSpec spec;
  spec.bundled_karate = (target_path == "karate");
  spec.edges_path = target_path;
  spec.attributes_path = target_attributes;
  const LoadedNetwork target = load_target(spec);
  return assess_networks(sim.network, target.network, ensemble);
}

}  // namespace snsim
