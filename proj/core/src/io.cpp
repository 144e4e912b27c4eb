#include "gcensus/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "gcensus/errors.hpp"

namespace gcensus {

namespace {

using nlohmann::json;

void require_keys(const json& j, const char* where,
                  std::initializer_list<const char*> allowed) {
  for (const auto& item : j.items()) {
    bool ok = false;
    for (const char* k : allowed) {
      if (item.key() == k) {
        ok = true;
        break;
      }
    }
    if (!ok) {
      throw ConfigError(std::string("unknown key \"") + item.key() + "\" in " +
                        where);
    }
  }
}

double get_number(const json& j, const char* key, double fallback) {
  if (!j.contains(key)) return fallback;
  if (!j.at(key).is_number()) {
    throw ConfigError(std::string(key) + " must be a number");
  }
  return j.at(key).get<double>();
}

SurfaceSpec surface_from_json(const json& j, const char* where,
                              const SurfaceSpec& fallback) {
  require_keys(j, where, {"label", "x", "y"});
  SurfaceSpec spec = fallback;
  if (j.contains("label")) {
    if (!j.at("label").is_string()) {
      throw ConfigError(std::string(where) + ".label must be a string");
    }
    spec.label = j.at("label").get<std::string>();
  }
  spec.x = get_number(j, "x", spec.x);
  spec.y = get_number(j, "y", spec.y);
  return spec;
}

}  // namespace

std::string config_to_json(const ExperimentConfig& cfg) {
  json j;
  j["surface"] = {{"label", cfg.surface.label},
                  {"x", cfg.surface.x},
                  {"y", cfg.surface.y}};
  j["target"] = {{"label", cfg.target.label},
                 {"x", cfg.target.x},
                 {"y", cfg.target.y}};
  j["seed"] = cfg.seed;
  j["mode"] = census_mode_name(cfg.mode);
  j["grid"] = cfg.grid;
  j["cutoff"] = cfg.cutoff;
  j["delta"] = cfg.delta;
  j["margin"] = cfg.margin;
  j["tolerance"] = cfg.tolerance;
  j["binning"] = {{"u_min", cfg.binning.u_min}, {"u_max", cfg.binning.u_max},
                  {"v_min", cfg.binning.v_min}, {"v_max", cfg.binning.v_max},
                  {"nu", cfg.binning.nu},       {"nv", cfg.binning.nv},
                  {"ntheta", cfg.binning.ntheta}};
  j["outdir"] = cfg.outdir;
  j["workers"] = cfg.workers;
  return j.dump();  // nlohmann sorts object keys: canonical by construction
}

ExperimentConfig config_from_json_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) {
    throw ConfigError("config root must be a JSON object");
  }
  require_keys(j, "config",
               {"surface", "target", "seed", "mode", "grid", "cutoff", "delta",
                "margin", "tolerance", "binning", "outdir", "workers"});

  ExperimentConfig cfg;
  if (j.contains("surface")) {
    cfg.surface = surface_from_json(j.at("surface"), "surface", cfg.surface);
  }
  if (j.contains("target")) {
    cfg.target = surface_from_json(j.at("target"), "target", cfg.target);
  }
  if (j.contains("seed")) {
    if (!j.at("seed").is_string()) throw ConfigError("seed must be a string");
    cfg.seed = j.at("seed").get<std::string>();
  }
  if (j.contains("mode")) {
    if (!j.at("mode").is_string()) throw ConfigError("mode must be a string");
    cfg.mode = census_mode_from_name(j.at("mode").get<std::string>());
  }
  if (j.contains("grid")) {
    if (!j.at("grid").is_array()) {
      throw ConfigError("grid must be an array of numbers");
    }
    cfg.grid.clear();
    for (const auto& v : j.at("grid")) {
      if (!v.is_number()) throw ConfigError("grid must be an array of numbers");
      cfg.grid.push_back(v.get<double>());
    }
  }
  cfg.cutoff = get_number(j, "cutoff", cfg.cutoff);
  cfg.delta = get_number(j, "delta", cfg.delta);
  cfg.margin = get_number(j, "margin", cfg.margin);
  cfg.tolerance = get_number(j, "tolerance", cfg.tolerance);
  if (j.contains("binning")) {
    const json& b = j.at("binning");
    require_keys(b, "binning",
                 {"u_min", "u_max", "v_min", "v_max", "nu", "nv", "ntheta"});
    cfg.binning.u_min = get_number(b, "u_min", cfg.binning.u_min);
    cfg.binning.u_max = get_number(b, "u_max", cfg.binning.u_max);
    cfg.binning.v_min = get_number(b, "v_min", cfg.binning.v_min);
    cfg.binning.v_max = get_number(b, "v_max", cfg.binning.v_max);
    cfg.binning.nu = static_cast<int>(get_number(b, "nu", cfg.binning.nu));
    cfg.binning.nv = static_cast<int>(get_number(b, "nv", cfg.binning.nv));
    cfg.binning.ntheta =
        static_cast<int>(get_number(b, "ntheta", cfg.binning.ntheta));
  }
  if (j.contains("outdir")) {
    if (!j.at("outdir").is_string()) {
      throw ConfigError("outdir must be a string");
    }
    cfg.outdir = j.at("outdir").get<std::string>();
  }
  if (j.contains("workers")) {
    if (!j.at("workers").is_number_integer()) {
      throw ConfigError("workers must be an integer");
    }
    cfg.workers = j.at("workers").get<int>();
  }
  validate_config(cfg);
  return cfg;
}

ExperimentConfig load_config(const std::string& path) {
  return config_from_json_text(read_text_file(path));
}

void validate_config(const ExperimentConfig& cfg) {
  auto finite = [](double v) { return std::isfinite(v); };
  if (!finite(cfg.surface.x) || !finite(cfg.surface.y) || cfg.surface.x <= 0 ||
      cfg.surface.y <= 0) {
    throw ConfigError("surface traces must be finite and positive");
  }
  if (!finite(cfg.target.x) || !finite(cfg.target.y) || cfg.target.x <= 0 ||
      cfg.target.y <= 0) {
    throw ConfigError("target traces must be finite and positive");
  }
  if (cfg.seed.empty()) throw ConfigError("seed word must be non-empty");
  if (!finite(cfg.cutoff) || cfg.cutoff <= 0.0) {
    throw ConfigError("cutoff must be positive");
  }
  for (std::size_t i = 0; i < cfg.grid.size(); ++i) {
    if (!finite(cfg.grid[i]) || cfg.grid[i] <= 0.0) {
      throw ConfigError("grid values must be positive");
    }
    if (i > 0 && cfg.grid[i] <= cfg.grid[i - 1]) {
      throw ConfigError("grid values must be strictly increasing");
    }
  }
  if (!(cfg.delta > 0.0) || cfg.delta > 0.1) {
    throw ConfigError("delta must lie in (0, 0.1]");
  }
  if (!finite(cfg.margin) || cfg.margin < 0.0 || cfg.margin > 2.0) {
    throw ConfigError("margin must lie in [0, 2]");
  }
  if (!finite(cfg.tolerance) || cfg.tolerance < 0.0) {
    throw ConfigError("tolerance must be non-negative");
  }
  const BinningSpec& b = cfg.binning;
  if (b.nu <= 0 || b.nv <= 0 || b.ntheta <= 0 || b.ntheta % 2 != 0) {
    throw ConfigError("binning needs positive counts and an even angle count");
  }
  if (!(b.u_min < b.u_max) || !(b.v_min < b.v_max) || b.v_min < 0.0) {
    throw ConfigError("binning box must be non-degenerate with v_min >= 0");
  }
  if (cfg.workers < 0 || cfg.workers > 1024) {
    throw ConfigError("workers must lie in [0, 1024] (0 = auto)");
  }
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string config_hash(const ExperimentConfig& cfg) {
  // The hash covers everything except outdir/workers: those change where and
  // how fast artifacts appear, never what they contain.
  ExperimentConfig canonical = cfg;
  canonical.outdir.clear();
  canonical.workers = 1;
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(
                    fnv1a64(config_to_json(canonical))));
  return buf;
}

std::string resolve_outdir(const ExperimentConfig& cfg) {
  if (!cfg.outdir.empty()) return cfg.outdir;
  if (const char* env = std::getenv(kOutdirEnvVar); env != nullptr && *env) {
    return env;
  }
  return ".";
}

std::string write_artifact(const std::string& outdir,
                           const std::string& filename,
                           const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path dir = outdir.empty() ? fs::path(".") : fs::path(outdir);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) {
    throw ConfigError("cannot create output directory " + dir.string() + ": " +
                      ec.message());
  }
  const fs::path path = dir / filename;
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw ConfigError("cannot open " + path.string() + " for writing");
  }
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) {
    throw ConfigError("short write to " + path.string());
  }
  return path.string();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ConfigError("cannot open " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace gcensus
