#include <cmath>
#include <string>
#include <vector>

#include <doctest.h>
#include <nlohmann/json.hpp>

#include "gcensus/census.hpp"
#include "gcensus/errors.hpp"
#include "gcensus/stats.hpp"
#include "gcensus/surface.hpp"

using namespace gcensus;

TEST_SUITE("stats") {

TEST_CASE("uniform grids") {
  const std::vector<double> g = uniform_grid(15.0, 45.0, 3.0);
  REQUIRE(g.size() == 11);
  CHECK(g.front() == 15.0);
  CHECK(g.back() == doctest::Approx(45.0).epsilon(1e-14));
  CHECK(uniform_grid(5.0, 5.0, 1.0).size() == 1);
  CHECK_THROWS_AS(uniform_grid(10.0, 5.0, 1.0), ConfigError);
  CHECK_THROWS_AS(uniform_grid(5.0, 10.0, 0.0), ConfigError);
  CHECK_THROWS_AS(uniform_grid(5.0, 10.0, -1.0), ConfigError);
}

TEST_CASE("counting curve reads the census step function") {
  const SurfaceStructure s = modular_torus();
  const Census census = enumerate_simple(s, 30.0);
  const std::vector<double> grid = uniform_grid(15.0, 30.0, 5.0);
  const CountingCurve cc = counting_curve(census, grid);
  REQUIRE(cc.grid.size() == 4);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    CHECK(cc.counts[i] == census.count_up_to(grid[i]));
    CHECK(cc.total_lengths[i] ==
          doctest::Approx(census.total_length_up_to(grid[i])).epsilon(1e-14));
  }
  CHECK(cc.counts.front() == 60);
  CHECK(cc.counts.back() == 234);
  CHECK_THROWS_AS(counting_curve(census, uniform_grid(15.0, 31.0, 4.0)),
                  GridExceedsCutoff);
}

TEST_CASE("exponent fit recovers a synthetic power law") {
  CountingCurve cc;
  for (double L = 10.0; L <= 50.0; L += 5.0) {
    cc.grid.push_back(L);
    cc.counts.push_back(static_cast<std::size_t>(std::llround(0.7 * L * L)));
    cc.total_lengths.push_back(0.0);
  }
  const ExponentFit fit = fit_exponent(cc, 10.0, 50.0);
  CHECK(fit.points == 9);
  CHECK(fit.slope == doctest::Approx(2.0).epsilon(1e-3));
  CHECK(fit.r2 > 0.9999);
  CHECK_THROWS_AS(fit_exponent(cc, 10.0, 25.0), InsufficientData);
}

TEST_CASE("average-length fraction at the frozen level") {
  const SurfaceStructure s = modular_torus();
  const Census census = enumerate_simple(s, 45.0);
  const CountingCurve cc = counting_curve(census, uniform_grid(15.0, 45.0, 3.0));
  CHECK(average_length_fraction(cc, 45.0) ==
        doctest::Approx(0.6672506831612661).epsilon(1e-9));
  CHECK_THROWS_AS(average_length_fraction(cc, 44.0), InsufficientData);  // not on grid
  CountingCurve empty;
  empty.grid = {1.0};
  empty.counts = {0};
  empty.total_lengths = {0.0};
  CHECK_THROWS_AS(average_length_fraction(empty, 1.0), EmptyCensus);
}

TEST_CASE("weighted multicurve count matches the brute-force lattice count") {
  const SurfaceStructure s = modular_torus();
  const Census census = enumerate_simple(s, 25.0);
  const ThurstonBallEstimate tb = thurston_ball(s, 25.0, &census);
  CHECK(tb.weighted_count == 279);
  CHECK(lattice_weighted_count(census, 25.0) == 279);
  for (double L : {10.0, 15.0, 20.0}) {
    CHECK(thurston_ball(s, L, &census).weighted_count ==
          lattice_weighted_count(census, L));
  }
  CHECK(tb.estimate ==
        doctest::Approx(279.0 / (25.0 * 25.0)).epsilon(1e-14));
  CHECK_THROWS_AS(thurston_ball(s, 1.0), CutoffTooSmall);
  CHECK_THROWS_AS(thurston_ball(s, 30.0, &census), GridExceedsCutoff);
}

TEST_CASE("counting constant approaches the reciprocal zeta value") {
  const SurfaceStructure s = modular_torus();
  const Census census = enumerate_simple(s, 40.0);
  const CountingCurve cc = counting_curve(census, uniform_grid(10.0, 40.0, 5.0));
  const ThurstonBallEstimate tb = thurston_ball(s, 40.0, &census);
  const double c = estimate_C(cc, tb, 40.0, s.d);
  CHECK(c == doctest::Approx(0.5991561181434598).epsilon(1e-9));
  const double six_over_pi2 = 6.0 / (M_PI * M_PI);
  CHECK(std::abs(c - six_over_pi2) < 0.05);
}

TEST_CASE("tables serialize deterministically and parse") {
  const SurfaceStructure s = modular_torus();
  const Census census = enumerate_simple(s, 30.0);
  const CountingCurve cc = counting_curve(census, uniform_grid(10.0, 30.0, 5.0));
  const std::string csv1 = stats_csv(s, cc, "0123456789abcdef");
  const std::string csv2 = stats_csv(s, cc, "0123456789abcdef");
  CHECK(csv1 == csv2);
  CHECK(csv1.find("0123456789abcdef") != std::string::npos);

  const std::string js1 = stats_summary_json(s, census, cc, "0123456789abcdef");
  const std::string js2 = stats_summary_json(s, census, cc, "0123456789abcdef");
  CHECK(js1 == js2);
  const nlohmann::json parsed = nlohmann::json::parse(js1);
  CHECK(parsed.contains("fit_slope"));
  CHECK(parsed.at("config_hash").get<std::string>() == "0123456789abcdef");
}

}  // TEST_SUITE
