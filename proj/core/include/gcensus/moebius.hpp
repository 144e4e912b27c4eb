#pragma once

#include <cmath>
#include <utility>

namespace gcensus {

// A point u + iv of the upper half plane, v > 0.
struct UpperHalfPoint {
  double u = 0.0;
  double v = 1.0;
};

// Orientation-preserving isometry of the upper half plane, stored as a real
// 2x2 matrix with det = 1. M and -M act identically, so every stored matrix
// is normalized to the canonical sign: a > 0, or a == 0 and b > 0.
struct Moebius {
  double a = 1.0, b = 0.0, c = 0.0, d = 1.0;

  Moebius() = default;
  Moebius(double a_, double b_, double c_, double d_);

  static Moebius identity() { return Moebius(); }

  double trace() const { return a + d; }
  // Compensated 2x2 determinant (Kahan): ad - bc evaluated with fused
  // multiply-adds so the cancellation between the two products cannot eat
  // the result. Accurate to ~1.5 ulp even when |ad| >> |ad - bc|, which is
  // exactly the regime of long word products; the naive expression would
  // carry noise of order |ad| * eps and poison the unit-determinant
  // renormalization that keys off this value.
  double det() const {
    const double w = b * c;
    const double e = std::fma(-b, c, w);
    const double f = std::fma(a, d, -w);
    return f + e;
  }
  Moebius inverse() const;
  UpperHalfPoint apply(const UpperHalfPoint& p) const;

  bool operator==(const Moebius& o) const = default;
};

// Matrix product with canonical sign. Unit determinant is preserved by
// algebra and deliberately not re-measured or re-imposed here: for products
// with entry magnitude E the stored determinant is only defined up to
// ~E^2 * eps of representation noise, so rescaling by it would corrupt
// traces far beyond their own rounding error. The validating constructor is
// for building matrices from raw user entries; composition trusts its
// operands.
Moebius compose(const Moebius& m1, const Moebius& m2);

double hyperbolic_distance(const UpperHalfPoint& p, const UpperHalfPoint& q);

// Translation length 2*arccosh(|tr|/2) of a hyperbolic element.
// Throws NotHyperbolic when |tr| <= 2 + 1e-12.
double translation_length(const Moebius& m);

// Boundary fixed points of a hyperbolic element, repelling first and
// attracting second. An endpoint at infinity is reported as +/-HUGE_VAL
// (use std::isinf to test). Throws NotHyperbolic otherwise.
std::pair<double, double> axis(const Moebius& m);

}  // namespace gcensus
