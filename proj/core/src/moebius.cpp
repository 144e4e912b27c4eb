#include "gcensus/moebius.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "gcensus/errors.hpp"

namespace gcensus {

namespace {
constexpr double kDetDrift = 1e-12;
constexpr double kParabolicBand = 1e-12;
}  // namespace

Moebius::Moebius(double a_, double b_, double c_, double d_)
    : a(a_), b(b_), c(c_), d(d_) {
  const double det = this->det();
  if (!(det > 0.0) || !std::isfinite(det)) {
    throw std::invalid_argument("Moebius entries must have positive determinant");
  }
  // Rescale to unit determinant, but only when the deviation exceeds what
  // entry rounding can explain at the current magnitude. For products with
  // large entries, ad - bc is a cancelling combination whose value moves by
  // ~|ad| * eps per composition even though the matrix itself is fine;
  // "fixing" that jitter by rescaling would inject a real scale error of
  // the same size into every entry (and thus into traces), compounding
  // exponentially along long words.
  const double noise_scale = std::abs(a * d) + std::abs(b * c);
  if (std::abs(det - 1.0) > kDetDrift * std::max(1.0, noise_scale)) {
    const double s = 1.0 / std::sqrt(det);
    a *= s;
    b *= s;
    c *= s;
    d *= s;
  }
  if (a < 0.0 || (a == 0.0 && b < 0.0)) {
    a = -a;
    b = -b;
    c = -c;
    d = -d;
  }
}

namespace {

// Sign canonicalization without the determinant gate. Products and
// adjugates of unit-determinant matrices have unit determinant by algebra;
// measuring it anyway is meaningless once entries are large (the exact
// determinant of the *stored* rounded entries drifts by ~|ad|*eps, and at
// entry magnitude E that noise is E^2*eps, which dwarfs 1 long before the
// entries themselves lose relative accuracy). Trusting the algebra keeps
// traces — and therefore lengths — correct to near machine precision along
// arbitrarily long words.
Moebius sign_normalized(double a, double b, double c, double d) {
  Moebius m;
  if (a < 0.0 || (a == 0.0 && b < 0.0)) {
    a = -a;
    b = -b;
    c = -c;
    d = -d;
  }
  m.a = a;
  m.b = b;
  m.c = c;
  m.d = d;
  return m;
}

}  // namespace

Moebius Moebius::inverse() const { return sign_normalized(d, -b, -c, a); }

UpperHalfPoint Moebius::apply(const UpperHalfPoint& p) const {
  const double cu = c * p.u + d;
  const double cv = c * p.v;
  const double den = cu * cu + cv * cv;
  UpperHalfPoint out;
  out.u = ((a * p.u + b) * cu + a * c * p.v * p.v) / den;
  out.v = p.v / den;
  return out;
}

Moebius compose(const Moebius& m1, const Moebius& m2) {
  return sign_normalized(m1.a * m2.a + m1.b * m2.c, m1.a * m2.b + m1.b * m2.d,
                         m1.c * m2.a + m1.d * m2.c, m1.c * m2.b + m1.d * m2.d);
}

double hyperbolic_distance(const UpperHalfPoint& p, const UpperHalfPoint& q) {
  const double du = p.u - q.u;
  const double dv = p.v - q.v;
  return std::acosh(1.0 + (du * du + dv * dv) / (2.0 * p.v * q.v));
}

double translation_length(const Moebius& m) {
  const double t = std::abs(m.trace());
  if (t <= 2.0 + kParabolicBand) {
    throw NotHyperbolic("|trace| <= 2, no translation length");
  }
  return 2.0 * std::acosh(t / 2.0);
}

std::pair<double, double> axis(const Moebius& m) {
  const double t = m.trace();
  if (std::abs(t) <= 2.0 + kParabolicBand) {
    throw NotHyperbolic("|trace| <= 2, no axis");
  }
  const double inf = std::numeric_limits<double>::infinity();
  if (std::abs(m.c) < 1e-14) {
    // Fixed points are infinity and b/(d-a); infinity attracts iff |a| > |d|.
    const double finite = m.b / (m.d - m.a);
    if (std::abs(m.a) > std::abs(m.d)) {
      return {finite, inf};
    }
    return {inf, finite};
  }
  const double disc = std::sqrt(t * t - 4.0);
  const double r1 = ((m.a - m.d) + disc) / (2.0 * m.c);
  const double r2 = ((m.a - m.d) - disc) / (2.0 * m.c);
  // A fixed point p attracts iff the derivative 1/(cp+d)^2 has modulus < 1.
  if (std::abs(m.c * r1 + m.d) > 1.0) {
    return {r2, r1};
  }
  return {r1, r2};
}

}  // namespace gcensus
