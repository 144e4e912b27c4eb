// Command-line front end: builds censuses, statistics tables, phase
// histograms, and structure comparisons as reproducible CSV/JSON artifacts,
// and runs the verification suite.
//
// Exit codes: 0 success, 1 failed verification or runtime failure,
// 2 configuration/usage error.

#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gcensus/acceptance.hpp"
#include "gcensus/census.hpp"
#include "gcensus/compare.hpp"
#include "gcensus/errors.hpp"
#include "gcensus/io.hpp"
#include "gcensus/parallel.hpp"
#include "gcensus/phase.hpp"
#include "gcensus/stats.hpp"
#include "gcensus/surface.hpp"
#include "gcensus/version.hpp"

namespace {

using namespace gcensus;

SurfaceStructure make_surface(const SurfaceSpec& spec) {
  return build_surface(spec.x, spec.y, spec.label);
}

Census build_census(const SurfaceStructure& s, const ExperimentConfig& cfg,
                    int workers) {
  switch (cfg.mode) {
    case CensusMode::kSimpleExact:
      return enumerate_simple(s, cfg.cutoff);
    case CensusMode::kOrbitBfs: {
      OrbitOptions options;
      options.margin = cfg.margin;
      options.workers = workers;
      return enumerate_type(s, CurveClass::parse(cfg.seed), cfg.cutoff,
                            options);
    }
    case CensusMode::kAllPrimitive:
      return enumerate_all_primitive(s, cfg.cutoff);
  }
  throw ConfigError("unreachable census mode");
}

void note_written(const std::string& path) {
  std::printf("wrote %s\n", path.c_str());
}

int cmd_surface(const ExperimentConfig& cfg) {
  const SurfaceStructure s = make_surface(cfg.surface);
  const std::string json = surface_to_json(s);
  std::fputs(json.c_str(), stdout);
  note_written(write_artifact(resolve_outdir(cfg), "surface.json", json));
  return 0;
}

int cmd_census(const ExperimentConfig& cfg) {
  const SurfaceStructure s = make_surface(cfg.surface);
  const int workers = resolve_workers(cfg.workers);
  const Census census = build_census(s, cfg, workers);
  const std::string hash = config_hash(cfg);
  note_written(write_artifact(resolve_outdir(cfg), "census.csv",
                              census_to_csv(census, hash)));
  std::printf("%zu classes with length <= %g (%s)\n", census.entries.size(),
              cfg.cutoff, census_mode_name(census.mode));
  return 0;
}

int cmd_stats(const ExperimentConfig& cfg) {
  const SurfaceStructure s = make_surface(cfg.surface);
  const int workers = resolve_workers(cfg.workers);
  const Census census = build_census(s, cfg, workers);
  const std::vector<double> grid =
      cfg.grid.empty() ? uniform_grid(cfg.cutoff / 3.0, cfg.cutoff,
                                      cfg.cutoff / 12.0)
                       : cfg.grid;
  const CountingCurve cc = counting_curve(census, grid);
  const std::string hash = config_hash(cfg);
  const std::string outdir = resolve_outdir(cfg);
  note_written(write_artifact(outdir, "stats.csv", stats_csv(s, cc, hash)));
  note_written(write_artifact(outdir, "stats_summary.json",
                              stats_summary_json(s, census, cc, hash)));
  return 0;
}

int cmd_histogram(const ExperimentConfig& cfg) {
  const SurfaceStructure s = make_surface(cfg.surface);
  const int workers = resolve_workers(cfg.workers);
  const Census census = build_census(s, cfg, workers);
  const PhaseHistogram h =
      build_histogram(s, census, cfg.delta, cfg.binning, workers);
  const std::string hash = config_hash(cfg);
  const std::string outdir = resolve_outdir(cfg);
  note_written(write_artifact(outdir, "histogram.csv", histogram_csv(h, hash)));
  note_written(write_artifact(outdir, "histogram_meta.json",
                              histogram_sidecar_json(h, hash)));
  note_written(
      write_artifact(outdir, "marginal_theta.csv", marginal_theta_csv(h)));
  note_written(write_artifact(outdir, "marginal_position.csv",
                              marginal_position_csv(h)));
  return 0;
}

int cmd_compare(const ExperimentConfig& cfg) {
  const SurfaceStructure s = make_surface(cfg.surface);
  const SurfaceStructure t = make_surface(cfg.target);
  const int workers = resolve_workers(cfg.workers);
  ExperimentConfig census_cfg = cfg;
  census_cfg.mode = CensusMode::kSimpleExact;
  const Census census = build_census(s, census_cfg, workers);
  const CompareReport report =
      compare_structures(s, t, census, cfg.tolerance, workers);
  const std::string hash = config_hash(cfg);
  const std::string outdir = resolve_outdir(cfg);
  note_written(
      write_artifact(outdir, "compare.json", compare_report_json(report, hash)));
  note_written(write_artifact(outdir, "compare_rows.csv",
                              compare_rows_csv(report, hash)));
  std::printf("%s vs %s: %s (ratios in [%.6f, %.6f])\n",
              report.source_label.c_str(), report.target_label.c_str(),
              verdict_name(report.verdict), report.ratio_inf,
              report.ratio_sup);
  return 0;
}

int cmd_verify(const ExperimentConfig& cfg, int criterion) {
  const int workers = resolve_workers(cfg.workers);
  std::vector<CriterionResult> results;
  if (criterion > 0) {
    results.push_back(run_criterion(criterion, workers));
  } else {
    results = run_all_criteria(workers);
  }
  bool all_passed = true;
  for (const CriterionResult& r : results) {
    std::printf("%s\n", format_result_line(r).c_str());
    all_passed = all_passed && r.passed;
  }
  if (criterion <= 0) {
    const std::string outdir = resolve_outdir(cfg);
    for (const auto& [name, bytes] : produce_artifact_bundle(workers)) {
      write_artifact(outdir, name, bytes);
    }
    std::printf("artifact bundle written to %s\n", outdir.c_str());
  }
  return all_passed ? 0 : 1;
}

// The config file (when given) supplies defaults; explicitly passed flags
// win. Implemented by loading the file before binding flag values.
std::string prescan_config_path(int argc, char** argv) {
  for (int i = 1; i < argc - 1; ++i) {
    const std::string arg = argv[i];
    if (arg == "--config" || arg == "-c") return argv[i + 1];
    if (arg.rfind("--config=", 0) == 0) return arg.substr(9);
  }
  return "";
}

}  // namespace

int main(int argc, char** argv) {
  ExperimentConfig cfg;
  try {
    const std::string config_path = prescan_config_path(argc, argv);
    if (!config_path.empty()) {
      cfg = load_config(config_path);
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }

  CLI::App app{std::string("geodesic census toolkit v") + kVersion};
  app.require_subcommand(1);
  std::string config_path_opt;
  app.add_option("--config,-c", config_path_opt,
                 "JSON config file (flags given on the command line win)");
  app.add_option("--outdir", cfg.outdir,
                 "output directory (default: $" + std::string(kOutdirEnvVar) +
                     " or the working directory)");
  app.add_option("--workers", cfg.workers, "worker threads (0 = auto)");

  auto add_surface_flags = [&](CLI::App* sub) {
    sub->add_option("--x", cfg.surface.x, "trace of the first generator");
    sub->add_option("--y", cfg.surface.y, "trace of the second generator");
    sub->add_option("--label", cfg.surface.label, "surface label");
  };
  std::string mode_name;  // outlives parsing; shared by the subcommands
  auto add_census_flags = [&](CLI::App* sub) {
    add_surface_flags(sub);
    sub->add_option("--seed", cfg.seed, "seed word over {a, A, b, B}");
    sub->add_option("--L", cfg.cutoff, "length cutoff");
    sub->add_option("--margin", cfg.margin, "orbit search margin");
    sub->add_option("--mode", mode_name,
                    "simple-exact | orbit-bfs | all-primitive")
        ->each([&cfg](const std::string& name) {
          cfg.mode = census_mode_from_name(name);
        });
  };

  CLI::App* surface = app.add_subcommand("surface", "trace triple and matrices");
  add_surface_flags(surface);

  CLI::App* census = app.add_subcommand("census", "enumerate a curve census");
  add_census_flags(census);

  CLI::App* stats = app.add_subcommand("stats", "counting statistics table");
  add_census_flags(stats);

  CLI::App* histogram =
      app.add_subcommand("histogram", "phase-space occupation histogram");
  add_census_flags(histogram);
  histogram->add_option("--delta", cfg.delta, "arc sampling step");

  CLI::App* compare =
      app.add_subcommand("compare", "marked length-spectrum comparison");
  add_surface_flags(compare);
  compare->add_option("--L", cfg.cutoff, "census cutoff");
  compare->add_option("--tx", cfg.target.x, "target: trace of first generator");
  compare->add_option("--ty", cfg.target.y, "target: trace of second generator");
  compare->add_option("--tol", cfg.tolerance, "isometry tolerance");

  CLI::App* verify = app.add_subcommand("verify", "run the verification suite");
  int criterion = 0;
  std::string profile = "desk";
  verify->add_option("--criterion", criterion, "run a single check (1-10)");
  verify->add_option("--profile", profile, "scale profile (desk)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // Help output is a success; everything else is a usage error.
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    validate_config(cfg);
    if (profile != "desk") {
      throw ConfigError("unknown profile: " + profile);
    }
    if (surface->parsed()) return cmd_surface(cfg);
    if (census->parsed()) return cmd_census(cfg);
    if (stats->parsed()) return cmd_stats(cfg);
    if (histogram->parsed()) return cmd_histogram(cfg);
    if (compare->parsed()) return cmd_compare(cfg);
    if (verify->parsed()) return cmd_verify(cfg, criterion);
    return 2;
  } catch (const ConfigError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}
