#include <cmath>

#include <doctest.h>

#include "gcensus/errors.hpp"
#include "gcensus/surface.hpp"
#include "gcensus/words.hpp"

using namespace gcensus;

TEST_SUITE("surface") {

TEST_CASE("modular torus trace triple") {
  const SurfaceStructure s = modular_torus();
  CHECK(s.label == "modular");
  CHECK(s.x == doctest::Approx(3.0));
  CHECK(s.y == doctest::Approx(3.0));
  CHECK(s.z == doctest::Approx(6.0).epsilon(1e-14));
  CHECK(s.d == 2);
  CHECK(std::abs(s.A.trace()) == doctest::Approx(3.0));
  CHECK(std::abs(s.B.trace()) == doctest::Approx(3.0));
}

TEST_CASE("third trace is the larger root") {
  const SurfaceStructure s = build_surface(3.0, 4.0);
  CHECK(s.z == doctest::Approx(6.0 + std::sqrt(11.0)).epsilon(1e-14));
  CHECK(s.z == doctest::Approx(9.3166247903554).epsilon(1e-12));
  CHECK(s.label == "torus(3,4)");
}

TEST_CASE("trace relation holds for every built surface") {
  for (const auto& [x, y] : {std::pair{3.0, 3.0}, {3.0, 4.0}, {2.9, 5.7}}) {
    const SurfaceStructure s = build_surface(x, y);
    const double relation =
        s.x * s.x + s.y * s.y + s.z * s.z - s.x * s.y * s.z;
    CHECK(std::abs(relation) <= 1e-9 * s.z * s.z);
  }
}

TEST_CASE("traces without a real completion are rejected") {
  CHECK_THROWS_AS(build_surface(2.0, 2.0), NoRealSolution);
  CHECK_THROWS_AS(build_surface(2.5, 2.5), NoRealSolution);
}

TEST_CASE("commutator of the generators is parabolic") {
  for (const auto& [x, y] : {std::pair{3.0, 3.0}, {3.0, 4.0}, {4.5, 3.2}}) {
    const SurfaceStructure s = build_surface(x, y);
    const Moebius commutator = evaluate(s, CurveClass::parse("abAB"));
    CHECK(std::abs(commutator.trace()) == doctest::Approx(2.0).epsilon(1e-9));
  }
}

TEST_CASE("generator lookup matches the stored matrices") {
  const SurfaceStructure s = modular_torus();
  CHECK(s.generator(0) == s.A);
  CHECK(s.generator(1) == s.A_inv);
  CHECK(s.generator(2) == s.B);
  CHECK(s.generator(3) == s.B_inv);
  CHECK(compose(s.A, s.A_inv) == Moebius::identity());
  CHECK(compose(s.B, s.B_inv) == Moebius::identity());
}

TEST_CASE("domain reduction fixes the base point and is idempotent") {
  const SurfaceStructure s = modular_torus();
  const auto [p0, g0] = reduce_to_domain(s, base_point());
  CHECK(p0.u == doctest::Approx(0.0));
  CHECK(p0.v == doctest::Approx(1.0));
  CHECK(g0 == Moebius::identity());

  const UpperHalfPoint far = compose(compose(s.A, s.B), s.A).apply({0.3, 0.7});
  const auto [p1, g1] = reduce_to_domain(s, far);
  const auto [p2, g2] = reduce_to_domain(s, p1);
  CHECK(hyperbolic_distance(p1, p2) <= 1e-12);
  CHECK(g2 == Moebius::identity());
}

TEST_CASE("domain reduction returns the transform it applied") {
  const SurfaceStructure s = modular_torus();
  for (const UpperHalfPoint start :
       {UpperHalfPoint{17.25, 0.004}, {-40.0, 2.5}, {0.125, 900.0}}) {
    const auto [reduced, g] = reduce_to_domain(s, start);
    const UpperHalfPoint replayed = g.apply(start);
    CHECK(hyperbolic_distance(reduced, replayed) <= 1e-7);
    CHECK(reduced.v > 0.0);
  }
}

TEST_CASE("domain reduction never moves a point farther out") {
  // Greedy descent may settle in different local minima from different
  // orbit representatives of the same point, but it must never increase the
  // distance to the base point, and its result must be stationary.
  const SurfaceStructure s = modular_torus();
  const UpperHalfPoint p{0.4, 1.3};
  for (int letter = 0; letter < 4; ++letter) {
    const UpperHalfPoint moved =
        compose(s.generator(letter), s.generator((letter + 2) % 4))
            .apply(p);
    const UpperHalfPoint reduced = reduce_to_domain(s, moved).first;
    CHECK(hyperbolic_distance(reduced, base_point()) <=
          hyperbolic_distance(moved, base_point()) + 1e-12);
    const UpperHalfPoint again = reduce_to_domain(s, reduced).first;
    CHECK(hyperbolic_distance(again, reduced) <= 1e-12);
  }
}

TEST_CASE("reduced points are one-step local minimizers") {
  const SurfaceStructure s = modular_torus();
  unsigned state = 99u;
  for (int i = 0; i < 200; ++i) {
    state = state * 1664525u + 1013904223u;
    const double u = (double(state >> 8 & 0xffff) / 65535.0 - 0.5) * 60.0;
    state = state * 1664525u + 1013904223u;
    const double v = std::exp((double(state >> 8 & 0xffff) / 65535.0 - 0.5) * 8.0);
    const auto [reduced, g] = reduce_to_domain(s, {u, v});
    const double dist = hyperbolic_distance(reduced, base_point());
    for (int letter = 0; letter < 4; ++letter) {
      const UpperHalfPoint moved = s.generator(letter).apply(reduced);
      CHECK(hyperbolic_distance(moved, base_point()) >= dist - 1e-12);
    }
  }
}

TEST_CASE("surface serialization carries the trace triple") {
  const SurfaceStructure s = build_surface(3.0, 4.0);
  const std::string json = surface_to_json(s);
  CHECK(json.find("torus(3,4)") != std::string::npos);
  CHECK(json.find("\"x\"") != std::string::npos);
  CHECK(json.find("\"z\"") != std::string::npos);
}

}  // TEST_SUITE
