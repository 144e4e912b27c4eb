#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gcensus/census.hpp"
#include "gcensus/surface.hpp"
#include "gcensus/words.hpp"

namespace gcensus {

// Marked comparison of two hyperbolic structures: the same words are
// evaluated on both, so rows line up class-by-class under the identity
// marking.

enum class CompareVerdict { kIsometricWithinTol, kDistinct };

const char* verdict_name(CompareVerdict v);

struct CompareRow {
  CurveClass cls;
  double length_source = 0.0;
  double length_target = 0.0;
  double ratio = 0.0;   // length_target / length_source
  double weight = 0.0;  // ratio^(d+1), the measure-change weight per class
};

struct CompareReport {
  std::string source_label;
  std::string target_label;
  double ratio_inf = 0.0;
  double ratio_sup = 0.0;
  double tolerance = 0.0;
  CompareVerdict verdict = CompareVerdict::kDistinct;
  std::vector<CompareRow> rows;  // census order
};

// Measure-change weight (ratio of lengths raised to d+1) for one class.
// Throws NotHyperbolic if the class is peripheral on either structure.
double rn_weight(const SurfaceStructure& source, const SurfaceStructure& target,
                 const CurveClass& c);

// Full row-by-row comparison over a census built on `source`.
// Throws EmptyCensus when there are no entries and PeripheralOnTarget if an
// entry evaluates to a parabolic on `target`.
CompareReport compare_structures(const SurfaceStructure& source,
                                 const SurfaceStructure& target,
                                 const Census& census, double tolerance = 0.005,
                                 int workers = 1);

// (inf, sup) of length ratios over the census entries.
std::pair<double, double> length_ratio_extremes(const SurfaceStructure& source,
                                                const SurfaceStructure& target,
                                                const Census& census,
                                                int workers = 1);

// Verdict only: isometric-within-tol iff sup <= 1+tol and inf >= 1-tol.
CompareVerdict isometry_test(const SurfaceStructure& source,
                             const SurfaceStructure& target,
                             const Census& census, double tolerance = 0.005,
                             int workers = 1);

std::string compare_report_json(const CompareReport& report,
                                const std::string& config_hash);
std::string compare_rows_csv(const CompareReport& report,
                             const std::string& config_hash);

}  // namespace gcensus
