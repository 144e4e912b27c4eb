#include "gcensus/surface.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "gcensus/errors.hpp"

namespace gcensus {

namespace {

std::string default_label(double x, double y) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "torus(%.12g,%.12g)", x, y);
  return buf;
}

}  // namespace

const Moebius& SurfaceStructure::generator(int letter) const {
  switch (letter) {
    case 0:
      return A;
    case 1:
      return A_inv;
    case 2:
      return B;
    case 3:
      return B_inv;
    default:
      throw std::invalid_argument("generator letter out of range");
  }
}

SurfaceStructure build_surface(double x, double y, std::string label) {
  const double disc = x * x * y * y - 4.0 * (x * x + y * y);
  if (disc < 0.0) {
    throw NoRealSolution("x^2 y^2 - 4(x^2 + y^2) < 0, traces do not complete");
  }
  const double z = (x * y + std::sqrt(disc)) / 2.0;
  if (std::abs(z) <= 2.0) {
    throw DegenerateTrace("completed trace z lies in the parabolic band");
  }
  // Root of eta^2 + z*eta + 1 = 0 with |eta| >= 1; the copysign form keeps
  // the addition cancellation-free for either sign of z.
  const double eta = (-z - std::copysign(std::sqrt(z * z - 4.0), z)) / 2.0;

  SurfaceStructure s;
  s.label = label.empty() ? default_label(x, y) : std::move(label);
  s.x = x;
  s.y = y;
  s.z = z;
  s.A = Moebius(x, 1.0, -1.0, 0.0);
  s.B = Moebius(0.0, eta, -1.0 / eta, y);
  s.A_inv = s.A.inverse();
  s.B_inv = s.B.inverse();
  s.d = 2;

  // Construction sanity: the commutator must be parabolic, |trace| = 2. The
  // stored sign is not meaningful because composition renormalizes every
  // result to the canonical representative of {M, -M}.
  const Moebius comm =
      compose(compose(s.A, s.B), compose(s.A_inv, s.B_inv));
  if (std::abs(std::abs(comm.trace()) - 2.0) > 1e-6) {
    throw DegenerateTrace("commutator is not parabolic; construction broken");
  }
  return s;
}

SurfaceStructure modular_torus() { return build_surface(3.0, 3.0, "modular"); }

std::pair<UpperHalfPoint, Moebius> reduce_to_domain(const SurfaceStructure& s,
                                                    UpperHalfPoint p) {
  constexpr int kMaxSteps = 10000;
  constexpr double kImprovement = 1e-12;
  const UpperHalfPoint base = base_point();
  Moebius g;
  double dist = hyperbolic_distance(p, base);
  for (int step = 0; step < kMaxSteps; ++step) {
    int best = -1;
    double best_dist = dist - kImprovement;
    UpperHalfPoint best_point;
    for (int k = 0; k < 4; ++k) {
      const UpperHalfPoint q = s.generator(k).apply(p);
      const double dq = hyperbolic_distance(q, base);
      if (dq < best_dist) {
        best = k;
        best_dist = dq;
        best_point = q;
      }
    }
    if (best < 0) {
      return {p, g};
    }
    p = best_point;
    dist = best_dist;
    g = compose(s.generator(best), g);
  }
  throw NonTermination("domain reduction did not settle in 10^4 steps");
}

std::string surface_to_json(const SurfaceStructure& s) {
  nlohmann::json j;
  j["label"] = s.label;
  j["x"] = s.x;
  j["y"] = s.y;
  j["z"] = s.z;
  return j.dump();
}

}  // namespace gcensus
