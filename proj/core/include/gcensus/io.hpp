#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "gcensus/census.hpp"
#include "gcensus/phase.hpp"

namespace gcensus {

struct SurfaceSpec {
  std::string label;  // empty = derive from traces
  double x = 3.0;
  double y = 3.0;
};

// One experiment, fully determined: every artifact embeds the hash of this
// struct so results can be traced back to their exact inputs.
struct ExperimentConfig {
  SurfaceSpec surface{"modular", 3.0, 3.0};
  SurfaceSpec target{"", 3.0, 4.0};
  std::string seed = "a";
  CensusMode mode = CensusMode::kSimpleExact;
  std::vector<double> grid;  // cutoffs for statistics; empty = single cutoff
  double cutoff = 30.0;
  double delta = 0.05;
  double margin = 0.5;
  double tolerance = 0.005;
  BinningSpec binning;
  std::string outdir;  // empty = env var or current directory
  int workers = 1;
};

// Name of the environment variable that supplies the default output
// directory when neither the config nor the command line names one.
inline constexpr const char* kOutdirEnvVar = "GCENSUS_OUTDIR";

// Canonical JSON form (sorted keys, no whitespace): the hashing preimage.
std::string config_to_json(const ExperimentConfig& cfg);

// Strict parse: unknown keys, malformed values, or out-of-range numbers
// throw ConfigError.
ExperimentConfig config_from_json_text(const std::string& text);
ExperimentConfig load_config(const std::string& path);

// Range checks shared by every entry point (CLI flags bypass JSON parsing).
void validate_config(const ExperimentConfig& cfg);

std::uint64_t fnv1a64(std::string_view bytes);
std::string config_hash(const ExperimentConfig& cfg);

// Resolved output directory: explicit > environment > current directory.
std::string resolve_outdir(const ExperimentConfig& cfg);

// Writes bytes exactly as given (no newline translation), creating parent
// directories as needed. Returns the full path written.
std::string write_artifact(const std::string& outdir,
                           const std::string& filename,
                           const std::string& content);

std::string read_text_file(const std::string& path);

}  // namespace gcensus
