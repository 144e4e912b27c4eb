#include "gcensus/compare.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include <nlohmann/json.hpp>

#include "gcensus/errors.hpp"
#include "gcensus/parallel.hpp"
#include "gcensus/version.hpp"

namespace gcensus {

const char* verdict_name(CompareVerdict v) {
  switch (v) {
    case CompareVerdict::kIsometricWithinTol:
      return "isometric-within-tol";
    case CompareVerdict::kDistinct:
      return "distinct";
  }
  return "unknown";
}

double rn_weight(const SurfaceStructure& source, const SurfaceStructure& target,
                 const CurveClass& c) {
  const double ls = curve_length(source, c);
  const double lt = curve_length(target, c);
  return std::pow(lt / ls, double(source.d + 1));
}

CompareReport compare_structures(const SurfaceStructure& source,
                                 const SurfaceStructure& target,
                                 const Census& census, double tolerance,
                                 int workers) {
  if (census.entries.empty()) {
    throw EmptyCensus("comparison needs at least one census entry");
  }
  if (!(tolerance >= 0.0)) {
    throw ConfigError("comparison tolerance must be non-negative");
  }
  CompareReport report;
  report.source_label = source.label;
  report.target_label = target.label;
  report.tolerance = tolerance;

  const int exponent = source.d + 1;
  report.rows = parallel_map(
      census.entries,
      [&](const CensusEntry& e) {
        CompareRow row;
        row.cls = e.cls;
        // Recomputed rather than read off the entry, so the comparison stays
        // correct when the census was built on the other structure (the
        // reciprocity property swaps the roles).
        row.length_source = curve_length(source, e.cls);
        const Moebius m = evaluate(target, e.cls);
        if (std::abs(m.trace()) <= 2.0 + 1e-9) {
          throw PeripheralOnTarget("class " + e.cls.str() +
                                   " is parabolic on " + target.label);
        }
        row.length_target = translation_length(m);
        row.ratio = row.length_target / row.length_source;
        row.weight = std::pow(row.ratio, double(exponent));
        return row;
      },
      workers);

  report.ratio_inf = report.rows.front().ratio;
  report.ratio_sup = report.rows.front().ratio;
  for (const CompareRow& row : report.rows) {
    report.ratio_inf = std::min(report.ratio_inf, row.ratio);
    report.ratio_sup = std::max(report.ratio_sup, row.ratio);
  }
  report.verdict = (report.ratio_sup <= 1.0 + tolerance &&
                    report.ratio_inf >= 1.0 - tolerance)
                       ? CompareVerdict::kIsometricWithinTol
                       : CompareVerdict::kDistinct;
  return report;
}

std::pair<double, double> length_ratio_extremes(const SurfaceStructure& source,
                                                const SurfaceStructure& target,
                                                const Census& census,
                                                int workers) {
  const CompareReport report =
      compare_structures(source, target, census, 0.005, workers);
  return {report.ratio_inf, report.ratio_sup};
}

CompareVerdict isometry_test(const SurfaceStructure& source,
                             const SurfaceStructure& target,
                             const Census& census, double tolerance,
                             int workers) {
  return compare_structures(source, target, census, tolerance, workers)
      .verdict;
}

std::string compare_report_json(const CompareReport& report,
                                const std::string& config_hash) {
  nlohmann::json j;
  j["version"] = kVersion;
  j["config_hash"] = config_hash;
  j["source"] = report.source_label;
  j["target"] = report.target_label;
  j["ratio_inf"] = report.ratio_inf;
  j["ratio_sup"] = report.ratio_sup;
  j["tolerance"] = report.tolerance;
  j["verdict"] = verdict_name(report.verdict);
  j["rows"] = report.rows.size();
  return j.dump(2) + "\n";
}

std::string compare_rows_csv(const CompareReport& report,
                             const std::string& config_hash) {
  std::string out;
  out += std::string("# geodesic-census v") + kVersion + "\n";
  out += "# config " + config_hash + "\n";
  out += "# source " + report.source_label + "\n";
  out += "# target " + report.target_label + "\n";
  out += "word,length_source,length_target,ratio,weight\n";
  char line[160];
  for (const CompareRow& row : report.rows) {
    out += row.cls.str();
    std::snprintf(line, sizeof(line), ",%.17g,%.17g,%.17g,%.17g\n",
                  row.length_source, row.length_target, row.ratio, row.weight);
    out += line;
  }
  return out;
}

}  // namespace gcensus
