#include <cmath>
#include <string>
#include <utility>

#include <doctest.h>
#include <nlohmann/json.hpp>

#include "gcensus/census.hpp"
#include "gcensus/compare.hpp"
#include "gcensus/errors.hpp"
#include "gcensus/surface.hpp"
#include "gcensus/words.hpp"

using namespace gcensus;

TEST_SUITE("compare") {

TEST_CASE("a structure compared against itself is exactly isometric") {
  const SurfaceStructure s = modular_torus();
  const Census census = enumerate_simple(s, 30.0);
  const CompareReport report = compare_structures(s, s, census);
  CHECK(report.ratio_inf == 1.0);
  CHECK(report.ratio_sup == 1.0);
  CHECK(report.verdict == CompareVerdict::kIsometricWithinTol);
  REQUIRE(report.rows.size() == census.entries.size());
  for (const CompareRow& row : report.rows) {
    CHECK(row.ratio == 1.0);
    CHECK(row.weight == 1.0);
  }
  CHECK(isometry_test(s, s, census) == CompareVerdict::kIsometricWithinTol);
}

TEST_CASE("distinct structures straddle unity") {
  const SurfaceStructure s = modular_torus();
  const SurfaceStructure t = build_surface(3.0, 4.0);
  const Census census = enumerate_simple(s, 30.0);
  const CompareReport report = compare_structures(s, t, census);
  CHECK(report.verdict == CompareVerdict::kDistinct);
  CHECK(report.ratio_sup > 1.3);   // the curve b stretches
  CHECK(report.ratio_inf < 0.84);  // the curve a*b^-1 shrinks
  const auto [inf, sup] = length_ratio_extremes(s, t, census);
  CHECK(inf == report.ratio_inf);
  CHECK(sup == report.ratio_sup);
  // a huge tolerance declares anything close to isometric
  CHECK(isometry_test(s, t, census, 1.0) ==
        CompareVerdict::kIsometricWithinTol);
}

TEST_CASE("a single-class census has equal extremes") {
  const SurfaceStructure s = modular_torus();
  const SurfaceStructure t = build_surface(3.0, 4.0);
  Census census = enumerate_simple(s, 2.0);
  census.entries.resize(1);
  const CompareReport report = compare_structures(s, t, census);
  CHECK(report.ratio_inf == report.ratio_sup);
}

TEST_CASE("measure-change weights") {
  const SurfaceStructure s = modular_torus();
  const SurfaceStructure t = build_surface(3.0, 4.0);
  const CurveClass b = CurveClass::parse("b");
  CHECK(rn_weight(s, s, b) == 1.0);
  const double expected =
      std::pow(std::acosh(2.0) / std::acosh(1.5), 3.0);
  CHECK(rn_weight(s, t, b) == doctest::Approx(expected).epsilon(1e-12));
  CHECK_THROWS_AS(rn_weight(s, t, CurveClass::parse("abAB")), NotHyperbolic);

  // weight is a strictly increasing function of the length ratio
  const Census census = enumerate_simple(s, 12.0);
  const CompareReport report = compare_structures(s, t, census);
  for (std::size_t i = 0; i < report.rows.size(); ++i) {
    for (std::size_t j = i + 1; j < report.rows.size(); ++j) {
      if (report.rows[i].ratio < report.rows[j].ratio) {
        CHECK(report.rows[i].weight < report.rows[j].weight);
      } else if (report.rows[i].ratio > report.rows[j].ratio) {
        CHECK(report.rows[i].weight > report.rows[j].weight);
      }
    }
  }
}

TEST_CASE("swapping the roles inverts the extremes") {
  const SurfaceStructure s = modular_torus();
  const SurfaceStructure t = build_surface(3.0, 4.0);
  const Census census = enumerate_simple(s, 20.0);
  const CompareReport forward = compare_structures(s, t, census);
  const CompareReport backward = compare_structures(t, s, census);
  CHECK(forward.ratio_sup ==
        doctest::Approx(1.0 / backward.ratio_inf).epsilon(1e-9));
  CHECK(forward.ratio_inf ==
        doctest::Approx(1.0 / backward.ratio_sup).epsilon(1e-9));
}

TEST_CASE("classes that degenerate on the target are reported") {
  const SurfaceStructure s = modular_torus();
  SurfaceStructure broken = modular_torus();
  broken.label = "broken";
  broken.B = Moebius(1.0, 1.0, 0.0, 1.0);  // parabolic in place of B
  broken.B_inv = broken.B.inverse();
  Census census;
  census.surface_label = s.label;
  census.cutoff = 5.0;
  census.entries.push_back(
      {CurveClass::parse("b"), curve_length(s, CurveClass::parse("b")), 0});
  CHECK_THROWS_AS(compare_structures(s, broken, census), PeripheralOnTarget);
}

TEST_CASE("input validation") {
  const SurfaceStructure s = modular_torus();
  Census empty;
  empty.surface_label = s.label;
  CHECK_THROWS_AS(compare_structures(s, s, empty), EmptyCensus);
  const Census census = enumerate_simple(s, 5.0);
  CHECK_THROWS_AS(compare_structures(s, s, census, -0.1), ConfigError);
}

TEST_CASE("reports serialize deterministically and parse") {
  const SurfaceStructure s = modular_torus();
  const SurfaceStructure t = build_surface(3.0, 4.0);
  const Census census = enumerate_simple(s, 15.0);
  const CompareReport report = compare_structures(s, t, census);
  const std::string js1 = compare_report_json(report, "cafebabecafebabe");
  const std::string js2 = compare_report_json(report, "cafebabecafebabe");
  CHECK(js1 == js2);
  const nlohmann::json parsed = nlohmann::json::parse(js1);
  CHECK(parsed.at("verdict").get<std::string>() == "distinct");
  CHECK(parsed.at("config_hash").get<std::string>() == "cafebabecafebabe");
  const std::string csv = compare_rows_csv(report, "cafebabecafebabe");
  CHECK(csv == compare_rows_csv(report, "cafebabecafebabe"));
  CHECK(csv.find("cafebabecafebabe") != std::string::npos);
}

}  // TEST_SUITE
