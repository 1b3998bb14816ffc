#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "snsim/experiment.hpp"

namespace snsim {

struct ManifestEntry {
  std::string path;  // relative to the output directory
  std::uint64_t bytes = 0;
  std::string fnv1a64;  // hex digest of the file contents
};

struct FileManifest {
  std::vector<ManifestEntry> files;
};

std::uint64_t fnv1a64(std::string_view bytes);

// Writes the report tree:
//   report.json
//   manifest.json
//   <variant>/trace.csv           iteration,edge_count,cost,wall_seconds
//   <variant>/series.csv          iteration,global,local,combined,cost,wall
//   <variant>/snapshots/iter_NNN.edges
//   <variant>/front.json          (optimized variants)
//   <variant>/generations.csv     generation,best_similarity,front_size
// Refuses a non-empty output directory unless force is set. Throws IoError
// on any filesystem failure, naming the path.
FileManifest write_report(const ExperimentReport& report,
                          const std::string& output_dir, bool force);

// JSON renderings (used by write_report and the CLI).
std::string index_report_json(const IndexReport& report);
std::string census_json(const TriadCensus& census,
                        const std::array<std::optional<double>, 4>& zscores,
                        const std::array<std::optional<double>, 4>& sp,
                        const EnsembleConfig& ensemble);

}  // namespace snsim
