#pragma once

#include <map>
#include <string>
#include <vector>

namespace gcensus {

// One verification check of the release gate. `passed` reflects what was
// measured; an infeasible check reports false together with the analysis of
// why the measurement is out of reach, instead of silently shrinking scope.
struct CriterionResult {
  int index = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

inline constexpr int kCriterionCount = 10;

// Runs one numbered check (1-based). Unexpected exceptions are captured into
// a failed result rather than propagated. Throws std::out_of_range only for
// an index outside [1, kCriterionCount].
CriterionResult run_criterion(int index, int workers);

std::vector<CriterionResult> run_all_criteria(int workers);

// "PASS  3 ball-volume-constant   <detail>  [1.23s]"
std::string format_result_line(const CriterionResult& r);

// The deterministic artifact bundle (filename -> exact bytes) produced by a
// verification run; the determinism check compares two bundles byte-wise and
// the CLI writes one to disk.
std::map<std::string, std::string> produce_artifact_bundle(int workers);

}  // namespace gcensus
