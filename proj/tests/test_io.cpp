#include <cstdlib>
#include <filesystem>
#include <string>
#include <vector>

#include <doctest.h>
#include <nlohmann/json.hpp>

#include "gcensus/errors.hpp"
#include "gcensus/io.hpp"
#include "gcensus/parallel.hpp"

using namespace gcensus;

namespace {

ExperimentConfig parse_patched(const char* patch) {
  // start from the canonical defaults and overlay one JSON fragment
  nlohmann::json j = nlohmann::json::parse(config_to_json(ExperimentConfig{}));
  j.merge_patch(nlohmann::json::parse(patch));
  return config_from_json_text(j.dump());
}

}  // namespace

TEST_SUITE("io") {

TEST_CASE("config round trips through canonical JSON") {
  ExperimentConfig cfg;
  cfg.seed = "aab";
  cfg.cutoff = 17.5;
  cfg.grid = {5.0, 10.0, 15.0};
  cfg.mode = CensusMode::kOrbitBfs;
  cfg.workers = 4;
  const std::string text = config_to_json(cfg);
  const ExperimentConfig back = config_from_json_text(text);
  CHECK(config_to_json(back) == text);
  CHECK(back.seed == "aab");
  CHECK(back.cutoff == 17.5);
  CHECK(back.mode == CensusMode::kOrbitBfs);
  CHECK(back.grid == cfg.grid);
}

TEST_CASE("an empty object parses to the defaults") {
  const ExperimentConfig cfg = config_from_json_text("{}");
  CHECK(cfg.surface.x == 3.0);
  CHECK(cfg.surface.y == 3.0);
  CHECK(cfg.seed == "a");
  CHECK(cfg.cutoff == 30.0);
  CHECK(cfg.mode == CensusMode::kSimpleExact);
  CHECK(config_to_json(cfg) == config_to_json(ExperimentConfig{}));
}

TEST_CASE("unknown keys are rejected") {
  CHECK_THROWS_AS(parse_patched(R"({"cutof": 10})"), ConfigError);
  CHECK_THROWS_AS(parse_patched(R"({"surface": {"zz": 1}})"), ConfigError);
  CHECK_THROWS_AS(config_from_json_text("[1,2]"), ConfigError);
  CHECK_THROWS_AS(config_from_json_text("not json at all"), ConfigError);
}

TEST_CASE("out-of-range values are rejected") {
  CHECK_THROWS_AS(parse_patched(R"({"delta": 0.5})"), ConfigError);
  CHECK_THROWS_AS(parse_patched(R"({"delta": 0.0})"), ConfigError);
  CHECK_THROWS_AS(parse_patched(R"({"workers": 2000})"), ConfigError);
  CHECK_THROWS_AS(parse_patched(R"({"cutoff": -1.0})"), ConfigError);
  CHECK_THROWS_AS(parse_patched(R"({"seed": ""})"), ConfigError);
  CHECK_THROWS_AS(parse_patched(R"({"grid": [10.0, 5.0]})"), ConfigError);
  CHECK_THROWS_AS(parse_patched(R"({"binning": {"ntheta": 15}})"),
                  ConfigError);
  CHECK_THROWS_AS(parse_patched(R"({"mode": "banana"})"), ConfigError);
  CHECK_NOTHROW(parse_patched(R"({"delta": 0.1})"));
}

TEST_CASE("hash function matches the published test vectors") {
  CHECK(fnv1a64("") == 0xcbf29ce484222325ull);
  CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cull);
}

TEST_CASE("config hash is stable across runtime-only fields") {
  ExperimentConfig cfg;
  const std::string h = config_hash(cfg);
  CHECK(h.size() == 16);
  CHECK(h.find_first_not_of("0123456789abcdef") == std::string::npos);

  ExperimentConfig moved = cfg;
  moved.outdir = "/tmp/somewhere-else";
  moved.workers = 8;
  CHECK(config_hash(moved) == h);  // where and how fast are not what

  ExperimentConfig other = cfg;
  other.seed = "aab";
  CHECK(config_hash(other) != h);
}

TEST_CASE("output directory resolution order") {
  ExperimentConfig cfg;
  unsetenv(kOutdirEnvVar);
  CHECK(resolve_outdir(cfg) == ".");
  setenv(kOutdirEnvVar, "/tmp/gcensus-env", 1);
  CHECK(resolve_outdir(cfg) == "/tmp/gcensus-env");
  cfg.outdir = "/tmp/gcensus-explicit";
  CHECK(resolve_outdir(cfg) == "/tmp/gcensus-explicit");
  unsetenv(kOutdirEnvVar);
}

TEST_CASE("artifacts round trip through the filesystem") {
  namespace fs = std::filesystem;
  const fs::path dir =
      fs::temp_directory_path() / "gcensus-io-test" / "nested";
  fs::remove_all(dir.parent_path());
  const std::string content = "line one\nline two\n\x01 binary-ish";
  const std::string path = write_artifact(dir.string(), "blob.csv", content);
  CHECK(read_text_file(path) == content);
  fs::remove_all(dir.parent_path());
  CHECK_THROWS_AS(read_text_file(path), ConfigError);
  CHECK_THROWS_AS(load_config("/nonexistent/gcensus.json"), ConfigError);
}

TEST_CASE("config files load from disk") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "gcensus-io-test-cfg";
  fs::remove_all(dir);
  ExperimentConfig cfg;
  cfg.cutoff = 12.0;
  cfg.seed = "aab";
  const std::string path =
      write_artifact(dir.string(), "config.json", config_to_json(cfg));
  const ExperimentConfig loaded = load_config(path);
  CHECK(config_to_json(loaded) == config_to_json(cfg));
  fs::remove_all(dir);
}

TEST_CASE("parallel map preserves order and propagates exceptions") {
  std::vector<int> items;
  for (int i = 0; i < 200; ++i) items.push_back(i);
  for (int workers : {1, 4}) {
    const std::vector<int> out =
        parallel_map(items, [](int x) { return x * x; }, workers);
    REQUIRE(out.size() == items.size());
    for (int i = 0; i < 200; ++i) CHECK(out[std::size_t(i)] == i * i);
  }
  CHECK_THROWS_AS(parallel_map(
                      items,
                      [](int x) -> int {
                        if (x == 137) throw ConfigError("boom");
                        return x;
                      },
                      4),
                  ConfigError);
  CHECK(resolve_workers(0) >= 1);
  CHECK(resolve_workers(-5) == 1);
  CHECK(resolve_workers(2) == 2);
}

}  // TEST_SUITE
