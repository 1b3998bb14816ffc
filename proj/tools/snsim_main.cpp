// Command-line front end: grow, assess, census, optimize and run the full
// experiment protocol. Exit codes: 0 success, 2 configuration/validation
// error, 3 I/O error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "snsim/errors.hpp"
#include "snsim/experiment.hpp"
#include "snsim/graph_io.hpp"
#include "snsim/karate.hpp"
#include "snsim/report_io.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitIo = 3;

struct CommonFlags {
  std::string config_path;
  std::string target;
  std::string attributes;
  std::string out;
  std::optional<std::uint64_t> seed;
  bool force = false;
};

void add_common(CLI::App* cmd, CommonFlags& flags, bool with_config = true) {
  if (with_config) {
    cmd->add_option("--config", flags.config_path,
                    "JSON config file (defaults apply when omitted)");
  }
  cmd->add_option("--target", flags.target,
                  "Target edge list path, or 'karate' for the bundled data");
  cmd->add_option("--attributes", flags.attributes,
                  "Attribute CSV for a file target");
  cmd->add_option("--out", flags.out, "Output directory");
  cmd->add_option("--seed", flags.seed, "Master seed (overrides the config)");
  cmd->add_flag("--force", flags.force, "Overwrite a non-empty output dir");
}

snsim::ExperimentConfig build_config(const CommonFlags& flags) {
  snsim::ExperimentConfig cfg;
  if (!flags.config_path.empty()) {
    cfg = snsim::parse_experiment_config(
        snsim::read_text_file(flags.config_path));
  }
  if (!flags.target.empty()) {
    if (flags.target == "karate") {
      cfg.target = snsim::TargetSpec{};
    } else {
      cfg.target.bundled_karate = false;
      cfg.target.edges_path = flags.target;
      cfg.target.attributes_path.reset();
    }
  }
  if (!flags.attributes.empty()) {
    if (cfg.target.bundled_karate) {
      throw snsim::ValidationError(
          "--attributes only applies to a file target");
    }
    cfg.target.attributes_path = flags.attributes;
  }
  if (!flags.out.empty()) cfg.output_dir = flags.out;
  if (flags.seed) cfg.seed = *flags.seed;
  if (flags.force) cfg.force = true;
  return cfg;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw snsim::IoError("cannot open '" + out_path + "' for writing");
  }
  out << text;
  if (!out) {
    throw snsim::IoError("write failure on '" + out_path + "'");
  }
}

snsim::LoadedNetwork load_by_name(const std::string& name,
                                  const std::string& attributes) {
  snsim::TargetSpec spec;
  spec.bundled_karate = (name == "karate" || name.empty());
  spec.edges_path = name;
  if (!attributes.empty()) spec.attributes_path = attributes;
  return snsim::load_target(spec);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"social network growth simulator and assessment toolkit"};
  app.require_subcommand(1);

  CommonFlags sim_flags, opt_flags, exp_flags;
  std::string sim_variant = "zero";
  std::string opt_variant = "real";

  auto* simulate = app.add_subcommand("simulate", "Grow one network trace");
  add_common(simulate, sim_flags);
  simulate->add_option("--variant", sim_variant,
                       "Feature setup: zero|real|simulated|hybrid");

  auto* optimize =
      app.add_subcommand("optimize", "Search preference data against a target");
  add_common(optimize, opt_flags);
  optimize->add_option("--variant", opt_variant,
                       "Feature setup: real|simulated|hybrid");

  auto* experiment =
      app.add_subcommand("experiment", "Run the full multi-variant protocol");
  add_common(experiment, exp_flags);

  std::string assess_sim, assess_target, assess_attrs, assess_out;
  std::size_t assess_samples = 100;
  std::uint64_t assess_seed = 0;
  auto* assess =
      app.add_subcommand("assess", "Composite index between two graphs");
  assess->add_option("--sim", assess_sim, "Simulated edge list path")
      ->required();
  assess->add_option("--target", assess_target,
                     "Target edge list path or 'karate'")
      ->required();
  assess->add_option("--attributes", assess_attrs,
                     "Attribute CSV for a file target");
  assess->add_option("--samples", assess_samples, "Ensemble sample count");
  assess->add_option("--seed", assess_seed, "Ensemble seed");
  assess->add_option("--out", assess_out, "Write the JSON here (else stdout)");

  std::string census_target = "karate", census_attrs, census_out;
  std::size_t census_samples = 100;
  std::uint64_t census_seed = 0;
  auto* census = app.add_subcommand(
      "census", "Triad census and significance profile of one graph");
  census->add_option("--target", census_target,
                     "Edge list path or 'karate' (default)");
  census->add_option("--attributes", census_attrs,
                     "Attribute CSV for a file target");
  census->add_option("--samples", census_samples, "Ensemble sample count");
  census->add_option("--seed", census_seed, "Ensemble seed");
  census->add_option("--out", census_out, "Write the JSON here (else stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (simulate->parsed()) {
      auto cfg = build_config(sim_flags);
      if (cfg.output_dir.empty()) {
        throw snsim::ValidationError("simulate needs --out");
      }
      const auto report =
          snsim::run_single_trace(cfg, snsim::variant_from_name(sim_variant));
      const auto& trace = report.variants[0].trace;
      std::cout << "wrote " << trace.snapshots.size() << " snapshots ("
                << trace.snapshots.back().network.edge_count()
                << " edges) to " << cfg.output_dir << "\n";
    } else if (optimize->parsed()) {
      auto cfg = build_config(opt_flags);
      if (cfg.output_dir.empty()) {
        throw snsim::ValidationError("optimize needs --out");
      }
      const auto report =
          snsim::run_optimize(cfg, snsim::variant_from_name(opt_variant));
      const auto& run = report.variants[0];
      std::cout << "front size " << run.front.size() << ", best similarity "
                << snsim::format_double(run.objectives->similarity) << ", in "
                << cfg.output_dir << "\n";
    } else if (experiment->parsed()) {
      auto cfg = build_config(exp_flags);
      if (cfg.output_dir.empty()) {
        throw snsim::ValidationError("experiment needs --out");
      }
      const auto report = snsim::run_experiment(cfg);
      for (const auto& run : report.variants) {
        std::cout << snsim::variant_name(run.variant) << ": best combined "
                  << snsim::format_double(run.objectives->similarity) << "\n";
      }
    } else if (assess->parsed()) {
      snsim::EnsembleConfig ensemble;
      ensemble.samples = assess_samples;
      ensemble.seed = assess_seed;
      std::optional<std::string> attrs;
      if (!assess_attrs.empty()) attrs = assess_attrs;
      const auto report =
          snsim::assess_pair(assess_sim, assess_target, attrs, ensemble);
      emit(snsim::index_report_json(report), assess_out);
    } else if (census->parsed()) {
      snsim::EnsembleConfig ensemble;
      ensemble.samples = census_samples;
      ensemble.seed = census_seed;
      const auto loaded = load_by_name(census_target, census_attrs);
      const auto labels = snsim::binary_labels(loaded.network);
      if (labels.empty()) {
        throw snsim::ValidationError(
            "census needs a binary first attribute column");
      }
      const auto counts = snsim::triad_census(loaded.network, labels);
      const auto z = snsim::triad_zscores(loaded.network, labels, ensemble);
      const auto sp = snsim::significance_profile(z);
      emit(snsim::census_json(counts, z, sp, ensemble), census_out);
    }
  } catch (const snsim::IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const snsim::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const snsim::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  }
  return kExitOk;
}
