#pragma once

#include <string>
#include <utility>

#include "gcensus/moebius.hpp"

namespace gcensus {

// A cusped hyperbolic torus presented as a marked two-generator group in
// trace coordinates (x, y, z) with x^2 + y^2 + z^2 = x*y*z, which forces the
// commutator of the generators to be parabolic (one cusp, finite area).
struct SurfaceStructure {
  std::string label;
  double x = 0.0, y = 0.0, z = 0.0;
  Moebius A, B;
  Moebius A_inv, B_inv;
  // Complexity exponent 2 for this topology; drives the polynomial counting
  // laws and the total-measure growth exponent d + 1.
  int d = 2;

  // Generator matrix for a letter index: 0 -> A, 1 -> A^-1, 2 -> B, 3 -> B^-1.
  const Moebius& generator(int letter) const;
};

// Completes (x, y) to the trace triple with z the larger root and builds the
// matrix normal form A = [[x,1],[-1,0]], B = [[0,eta],[-1/eta,y]].
// Throws NoRealSolution when no real z exists, DegenerateTrace when |z| <= 2.
SurfaceStructure build_surface(double x, double y, std::string label = "");

// The maximally symmetric cusped torus, trace triple (3, 3, 6).
SurfaceStructure modular_torus();

// Basepoint i of the upper half plane used by domain reduction and as the
// origin for displacement pruning.
inline UpperHalfPoint base_point() { return {0.0, 1.0}; }

// Greedy descent over {A, A^-1, B, B^-1}: returns (p', g) with p' = g(p) and
// p' a local minimizer of distance to the basepoint. Deterministic (best
// of the four moves, first index on ties) and idempotent on its own output.
// Throws NonTermination after 10^4 steps.
std::pair<UpperHalfPoint, Moebius> reduce_to_domain(const SurfaceStructure& s,
                                                    UpperHalfPoint p);

// {"label":..., "x":..., "y":..., "z":...}; matrices are reconstructed,
// never serialized.
std::string surface_to_json(const SurfaceStructure& s);

}  // namespace gcensus
