#include "snsim/report_io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "snsim/errors.hpp"

namespace snsim {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

json json_opt(const std::optional<double>& v) {
  if (!v.has_value()) return nullptr;
  return *v;
}

json genome_json(const Genome& g) {
  return json{{"signs", g.signs}, {"weights", g.weights}};
}

json objectives_json(const ObjectivePoint& p) {
  return json{{"similarity", p.similarity}, {"cost", p.cost}};
}

json index_json(const IndexReport& r) {
  json measures = json::array();
  for (const MeasureDistance& d : r.per_measure) {
    measures.push_back(json{{"name", std::string(measure_name(d.name))},
                            {"value", d.value},
                            {"missing", d.missing}});
  }
  return json{{"per_measure", measures},
              {"global_index", r.global_index},
              {"local_index", r.local_index},
              {"combined_index", r.combined_index},
              {"weights", r.weights}};
}

json scoring_json(const ScoringParams& p) {
  return json{{"q", p.feature_weight},
              {"r", p.popularity_weight},
              {"c", p.path_weight},
              {"m", p.attachment_factor},
              {"tau", p.tau},
              {"gamma", p.gamma},
              {"max_path_length", p.max_path_length},
              {"feature_mode", p.feature_mode == FeatureMode::literal
                                   ? "literal"
                                   : "similarity"}};
}

json config_json(const ExperimentConfig& cfg) {
  json target;
  if (cfg.target.bundled_karate) {
    target = "karate";
  } else {
    target = json{{"edges", cfg.target.edges_path}};
    if (cfg.target.attributes_path) {
      target["attributes"] = *cfg.target.attributes_path;
    }
  }
  json variants = json::array();
  for (Variant v : cfg.variants) variants.push_back(variant_name(v));
  json nsga{{"population", cfg.nsga.population},
            {"generations", cfg.nsga.generations},
            {"crossover_prob", cfg.nsga.crossover_prob},
            {"sbx_eta", cfg.nsga.sbx_eta},
            {"mutation_eta", cfg.nsga.mutation_eta}};
  if (cfg.nsga.mutation_prob) nsga["mutation_prob"] = *cfg.nsga.mutation_prob;
  return json{
      {"target", target},
      {"variants", variants},
      {"seed", cfg.seed},
      {"resolved_seeds",
       {{"feature_synthesis", cfg.feature_seed.value_or(0)},
        {"ensemble", cfg.ensemble_seed.value_or(0)},
        {"optimizer", cfg.optimizer_seed.value_or(0)}}},
      {"sim",
       {{"iterations", cfg.sim.iterations},
        {"edge_rate", cfg.sim.edge_rate},
        {"stop_at_saturation", cfg.sim.stop_at_saturation},
        {"scoring", scoring_json(cfg.sim.scoring)}}},
      {"nsga", nsga},
      {"ensemble", {{"samples", cfg.ensemble.samples}}},
      {"weights", cfg.weights},
      {"output_dir", cfg.output_dir}};
}

json report_json(const ExperimentReport& report) {
  json variants = json::array();
  for (const VariantRun& run : report.variants) {
    json trace = json::array();
    for (const Snapshot& s : run.trace.snapshots) {
      trace.push_back(json{{"iteration", s.iteration},
                           {"edge_count", s.network.edge_count()},
                           {"cost", s.elapsed_cost},
                           {"wall_seconds", s.elapsed_wall},
                           {"saturated", s.saturated}});
    }
    json series = json::array();
    for (std::size_t k = 0; k < run.series.size(); ++k) {
      json row = index_json(run.series[k]);
      row["iteration"] = run.trace.snapshots[k].iteration;
      series.push_back(std::move(row));
    }
    json v{{"variant", std::string(variant_name(run.variant))},
           {"feature_count", run.feature_count},
           {"optimized", run.optimized},
           {"trace", trace},
           {"series", series}};
    if (run.optimized) {
      v["genome"] = genome_json(run.genome);
      json front = json::array();
      for (const FrontMember& fm : run.front) {
        front.push_back(json{{"genome", genome_json(fm.genome)},
                             {"objectives", objectives_json(fm.objectives)}});
      }
      v["front"] = front;
    } else {
      v["genome"] = nullptr;
    }
    if (run.objectives) {
      v["best"] = objectives_json(*run.objectives);
    }
    variants.push_back(std::move(v));
  }
  return json{{"tool", std::string(kToolName)},
              {"version", std::string(kToolVersion)},
              {"config", config_json(report.config)},
              {"target",
               {{"node_count", report.target.network.node_count()},
                {"edge_count", report.target.network.edge_count()},
                {"feature_count", report.target.network.feature_count()},
                {"node_labels", report.target.labels}}},
              {"variants", variants}};
}

std::string trace_csv(const GrowthTrace& trace) {
  std::ostringstream out;
  out << "iteration,edge_count,cost,wall_seconds\n";
  for (const Snapshot& s : trace.snapshots) {
    out << s.iteration << ',' << s.network.edge_count() << ',' << s.elapsed_cost
        << ',' << format_double(s.elapsed_wall) << '\n';
  }
  return out.str();
}

std::string series_csv(const VariantRun& run) {
  std::ostringstream out;
  out << "iteration,global,local,combined,cost,wall\n";
  for (std::size_t k = 0; k < run.series.size(); ++k) {
    const Snapshot& s = run.trace.snapshots[k];
    const IndexReport& r = run.series[k];
    out << s.iteration << ',' << format_double(r.global_index) << ','
        << format_double(r.local_index) << ','
        << format_double(r.combined_index) << ',' << s.elapsed_cost << ','
        << format_double(s.elapsed_wall) << '\n';
  }
  return out.str();
}

std::string generations_csv(const std::vector<GenerationStat>& history) {
  std::ostringstream out;
  out << "generation,best_similarity,front_size\n";
  for (const GenerationStat& g : history) {
    out << g.generation << ',' << format_double(g.best_similarity) << ','
        << g.front_size << '\n';
  }
  return out.str();
}

std::string front_json_text(const VariantRun& run) {
  json front = json::array();
  for (const FrontMember& fm : run.front) {
    front.push_back(json{{"genome", genome_json(fm.genome)},
                         {"objectives", objectives_json(fm.objectives)}});
  }
  json body{{"variant", std::string(variant_name(run.variant))},
            {"front", front}};
  return body.dump(2) + "\n";
}

class TreeWriter {
 public:
  explicit TreeWriter(fs::path root) : root_(std::move(root)) {}

  void write(const std::string& relative, const std::string& bytes) {
    const fs::path full = root_ / relative;
    std::error_code ec;
    fs::create_directories(full.parent_path(), ec);
    if (ec) {
      throw IoError("cannot create directory '" +
                    full.parent_path().string() + "': " + ec.message());
    }
    std::ofstream out(full, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw IoError("cannot open '" + full.string() + "' for writing");
    }
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    out.flush();
    if (!out) {
      throw IoError("write failure on '" + full.string() + "'");
    }
    char digest[17];
    std::snprintf(digest, sizeof(digest), "%016llx",
                  static_cast<unsigned long long>(fnv1a64(bytes)));
    manifest_.files.push_back(
        ManifestEntry{relative, bytes.size(), std::string(digest)});
  }

  FileManifest finish() {
    json files = json::array();
    for (const ManifestEntry& e : manifest_.files) {
      files.push_back(json{
          {"path", e.path}, {"bytes", e.bytes}, {"fnv1a64", e.fnv1a64}});
    }
    const std::string text =
        json{{"files", files}}.dump(2) + "\n";
    const fs::path full = root_ / "manifest.json";
    std::ofstream out(full, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw IoError("cannot open '" + full.string() + "' for writing");
    }
    out << text;
    out.flush();
    if (!out) {
      throw IoError("write failure on '" + full.string() + "'");
    }
    return manifest_;
  }

 private:
  fs::path root_;
  FileManifest manifest_;
};

}  // namespace

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  return hash;
}

FileManifest write_report(const ExperimentReport& report,
                          const std::string& output_dir, bool force) {
  const fs::path root(output_dir);
  std::error_code ec;
  if (fs::exists(root, ec) && !fs::is_directory(root, ec)) {
    throw IoError("output path '" + output_dir + "' is not a directory");
  }
  if (fs::exists(root, ec) && !fs::is_empty(root, ec) && !force) {
    throw IoError("output directory '" + output_dir +
                  "' is not empty (pass --force to overwrite)");
  }
  fs::create_directories(root, ec);
  if (ec) {
    throw IoError("cannot create '" + output_dir + "': " + ec.message());
  }

  TreeWriter writer(root);
  writer.write("report.json", report_json(report).dump(2) + "\n");
  for (const VariantRun& run : report.variants) {
    const std::string base = std::string(variant_name(run.variant));
    if (!run.trace.snapshots.empty()) {
      writer.write(base + "/trace.csv", trace_csv(run.trace));
    }
    if (!run.series.empty()) {
      writer.write(base + "/series.csv", series_csv(run));
    }
    for (const Snapshot& s : run.trace.snapshots) {
      char name[32];
      std::snprintf(name, sizeof(name), "iter_%03zu.edges", s.iteration);
      writer.write(base + "/snapshots/" + name,
                   serialize_edge_list(s.network));
    }
    if (run.optimized) {
      writer.write(base + "/front.json", front_json_text(run));
      writer.write(base + "/generations.csv", generations_csv(run.history));
    }
  }
  return writer.finish();
}

std::string index_report_json(const IndexReport& report) {
  return index_json(report).dump(2) + "\n";
}

std::string census_json(const TriadCensus& census,
                        const std::array<std::optional<double>, 4>& zscores,
                        const std::array<std::optional<double>, 4>& sp,
                        const EnsembleConfig& ensemble) {
  json z = json::array();
  json s = json::array();
  for (std::size_t t = 0; t < 4; ++t) {
    z.push_back(json_opt(zscores[t]));
    s.push_back(json_opt(sp[t]));
  }
  json body{{"census", census.counts},
            {"zscores", z},
            {"significance_profile", s},
            {"ensemble",
             {{"samples", ensemble.samples}, {"seed", ensemble.seed}}}};
  return body.dump(2) + "\n";
}

}  // namespace snsim
