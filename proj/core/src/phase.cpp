#include "gcensus/phase.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <unordered_set>

#include <nlohmann/json.hpp>

#include "gcensus/errors.hpp"
#include "gcensus/parallel.hpp"
#include "gcensus/version.hpp"

namespace gcensus {

namespace {

const double kPi = std::acos(-1.0);
const double kTwoPi = 2.0 * kPi;

double wrap_angle(double theta) {
  theta = std::fmod(theta, kTwoPi);
  if (theta < 0.0) {
    theta += kTwoPi;
  }
  return theta;
}

int clamp_bin(double x, double lo, double hi, int bins) {
  const int i = static_cast<int>(std::floor((x - lo) / (hi - lo) *
                                            static_cast<double>(bins)));
  return std::min(std::max(i, 0), bins - 1);
}

// Point and direction of the unit-speed axis of m at arc parameter t,
// measured from the axis point nearest the top of its semicircle (or height
// 1 on a vertical axis). Increasing t moves toward the attracting endpoint.
struct AxisFrame {
  double u, v, theta;
};

struct AxisGeometry {
  bool vertical = false;
  bool upward = false;   // vertical case: toward infinity
  double x0 = 0.0;       // vertical case: real coordinate
  double center = 0.0;   // semicircle case
  double radius = 1.0;
  double sign = 1.0;     // +1 when the attracting endpoint is to the right

  AxisFrame at(double t) const {
    if (vertical) {
      if (upward) {
        return {x0, std::exp(t), kPi / 2.0};
      }
      return {x0, std::exp(-t), 3.0 * kPi / 2.0};
    }
    const double sh = std::sinh(t);
    const double ch = std::cosh(t);
    // z(t) = center + radius*(sign*tanh t + i*sech t) is unit speed; its
    // velocity direction is (sign*sech t, -tanh t)/1.
    const double u = center + sign * radius * sh / ch;
    const double v = radius / ch;
    const double theta = std::atan2(-sh / ch, sign / ch);
    return {u, v, wrap_angle(theta)};
  }
};

AxisGeometry axis_geometry(const Moebius& m) {
  const auto [rep, att] = axis(m);
  AxisGeometry g;
  if (std::isinf(rep) || std::isinf(att)) {
    g.vertical = true;
    g.upward = std::isinf(att);
    g.x0 = std::isinf(att) ? rep : att;
    return g;
  }
  g.center = (rep + att) / 2.0;
  g.radius = std::abs(att - rep) / 2.0;
  g.sign = att > rep ? 1.0 : -1.0;
  return g;
}

}  // namespace

BinningSpec default_binning() { return BinningSpec{}; }

double& PhaseHistogram::at(int iu, int iv, int it) {
  return mass[(std::size_t(iu) * std::size_t(spec.nv) + std::size_t(iv)) *
                  std::size_t(spec.ntheta) +
              std::size_t(it)];
}

double PhaseHistogram::at(int iu, int iv, int it) const {
  return mass[(std::size_t(iu) * std::size_t(spec.nv) + std::size_t(iv)) *
                  std::size_t(spec.ntheta) +
              std::size_t(it)];
}

std::vector<PhaseSample> sample_orbit(const SurfaceStructure& s,
                                      const CurveClass& c, double delta) {
  if (!(delta > 0.0) || delta > 0.1) {
    throw ConfigError("sampling step must lie in (0, 0.1]");
  }
  const Moebius m = evaluate(s, c);
  const double length = translation_length(m);  // NotHyperbolic if peripheral
  const AxisGeometry geometry = axis_geometry(m);

  const std::size_t n = static_cast<std::size_t>(std::ceil(length / delta));
  std::vector<PhaseSample> samples;
  samples.reserve(2 * n);
  for (std::size_t k = 0; k < n; ++k) {
    const double weight =
        (k + 1 == n) ? length - double(n - 1) * delta : delta;
    const double t = double(k) * delta + weight / 2.0;
    const AxisFrame frame = geometry.at(t);
    auto [point, g] = reduce_to_domain(s, {frame.u, frame.v});
    // A Moebius map rotates tangent directions by -2*arg(c*z + d) at z.
    const double rotation =
        -2.0 * std::atan2(g.c * frame.v, g.c * frame.u + g.d);
    const double theta = wrap_angle(frame.theta + rotation);
    samples.push_back({point.u, point.v, theta, weight / 2.0});
    samples.push_back({point.u, point.v, wrap_angle(theta + kPi), weight / 2.0});
  }
  return samples;
}

namespace {

// Bins a flip pair of samples: the angle bin is computed once from the first
// sample and the partner lands exactly half a period away, which is what
// makes histogram flip symmetry an identity rather than an approximation.
void bin_flip_pair(PhaseHistogram& h, const PhaseSample& s1,
                   const PhaseSample& s2) {
  const BinningSpec& spec = h.spec;
  const int iu = clamp_bin(s1.u, spec.u_min, spec.u_max, spec.nu);
  const int iv = clamp_bin(s1.v, spec.v_min, spec.v_max, spec.nv);
  const int it = clamp_bin(s1.theta, 0.0, kTwoPi, spec.ntheta);
  const int it_flip = (it + spec.ntheta / 2) % spec.ntheta;
  h.at(iu, iv, it) += s1.weight;
  h.at(iu, iv, it_flip) += s2.weight;
  h.total_mass += s1.weight + s2.weight;
}

std::vector<std::vector<PhaseSample>> sample_census(
    const SurfaceStructure& s, const Census& census, double delta,
    int workers) {
  return parallel_map(
      census.entries,
      [&](const CensusEntry& e) { return sample_orbit(s, e.cls, delta); },
      workers);
}

}  // namespace

PhaseHistogram build_histogram(const SurfaceStructure& s, const Census& census,
                               double delta, const BinningSpec& spec,
                               int workers) {
  if (spec.ntheta <= 0 || spec.ntheta % 2 != 0 || spec.nu <= 0 ||
      spec.nv <= 0) {
    throw ConfigError("binning needs positive counts and an even angle count");
  }
  PhaseHistogram h;
  h.spec = spec;
  h.mass.assign(spec.cells(), 0.0);
  char prov[192];
  std::snprintf(prov, sizeof(prov), "%s|%s|%s|L=%.17g|margin=%.17g|delta=%.17g",
                census.surface_label.c_str(), census.seed.str().c_str(),
                census_mode_name(census.mode), census.cutoff, census.margin,
                delta);
  h.provenance = prov;

  const auto per_entry = sample_census(s, census, delta, workers);
  // Accumulation order is fixed by census order, so the result is identical
  // for every worker count.
  for (const auto& samples : per_entry) {
    for (std::size_t i = 0; i + 1 < samples.size(); i += 2) {
      bin_flip_pair(h, samples[i], samples[i + 1]);
    }
  }
  return h;
}

double tv_distance(const PhaseHistogram& h1, const PhaseHistogram& h2) {
  if (!(h1.spec == h2.spec)) {
    throw BinningMismatch("histograms use different binning specs");
  }
  const double t1 = h1.total_mass;
  const double t2 = h2.total_mass;
  double sum = 0.0;
  for (std::size_t i = 0; i < h1.mass.size(); ++i) {
    const double p1 = t1 > 0.0 ? h1.mass[i] / t1 : 0.0;
    const double p2 = t2 > 0.0 ? h2.mass[i] / t2 : 0.0;
    sum += std::abs(p1 - p2);
  }
  return sum / 2.0;
}

std::vector<std::size_t> occupancy_profile(const SurfaceStructure& s,
                                           const Census& census, double delta,
                                           const BinningSpec& base,
                                           const std::vector<int>& resolutions,
                                           int workers) {
  const auto per_entry = sample_census(s, census, delta, workers);
  std::vector<std::size_t> counts;
  counts.reserve(resolutions.size());
  for (int r : resolutions) {
    if (r <= 0) {
      throw ConfigError("resolution factors must be positive");
    }
    const int nu = base.nu * r;
    const int nv = base.nv * r;
    const int nt = base.ntheta * r;
    std::unordered_set<long long> occupied;
    for (const auto& samples : per_entry) {
      for (const PhaseSample& p : samples) {
        const long long iu = clamp_bin(p.u, base.u_min, base.u_max, nu);
        const long long iv = clamp_bin(p.v, base.v_min, base.v_max, nv);
        const long long it = clamp_bin(p.theta, 0.0, kTwoPi, nt);
        occupied.insert((iu * nv + iv) * nt + it);
      }
    }
    counts.push_back(occupied.size());
  }
  return counts;
}

std::string histogram_csv(const PhaseHistogram& h, const std::string& config_hash) {
  std::string out;
  out += std::string("# geodesic-census v") + kVersion + "\n";
  out += "# config " + config_hash + "\n";
  out += "# provenance " + h.provenance + "\n";
  out += "u_bin,v_bin,theta_bin,mass\n";
  char line[96];
  for (int iu = 0; iu < h.spec.nu; ++iu) {
    for (int iv = 0; iv < h.spec.nv; ++iv) {
      for (int it = 0; it < h.spec.ntheta; ++it) {
        const double m = h.at(iu, iv, it);
        if (m != 0.0) {
          std::snprintf(line, sizeof(line), "%d,%d,%d,%.17g\n", iu, iv, it, m);
          out += line;
        }
      }
    }
  }
  return out;
}

std::string histogram_sidecar_json(const PhaseHistogram& h,
                                   const std::string& config_hash) {
  nlohmann::json j;
  j["version"] = kVersion;
  j["config_hash"] = config_hash;
  j["provenance"] = h.provenance;
  j["total_mass"] = h.total_mass;
  j["binning"] = {{"u_min", h.spec.u_min},   {"u_max", h.spec.u_max},
                  {"v_min", h.spec.v_min},   {"v_max", h.spec.v_max},
                  {"nu", h.spec.nu},         {"nv", h.spec.nv},
                  {"ntheta", h.spec.ntheta}};
  return j.dump(2) + "\n";
}

std::string marginal_theta_csv(const PhaseHistogram& h) {
  std::string out = "theta_bin,mass\n";
  char line[64];
  for (int it = 0; it < h.spec.ntheta; ++it) {
    double m = 0.0;
    for (int iu = 0; iu < h.spec.nu; ++iu) {
      for (int iv = 0; iv < h.spec.nv; ++iv) {
        m += h.at(iu, iv, it);
      }
    }
    std::snprintf(line, sizeof(line), "%d,%.17g\n", it, m);
    out += line;
  }
  return out;
}

std::string marginal_position_csv(const PhaseHistogram& h) {
  std::string out = "u_bin,v_bin,mass\n";
  char line[80];
  for (int iu = 0; iu < h.spec.nu; ++iu) {
    for (int iv = 0; iv < h.spec.nv; ++iv) {
      double m = 0.0;
      for (int it = 0; it < h.spec.ntheta; ++it) {
        m += h.at(iu, iv, it);
      }
      std::snprintf(line, sizeof(line), "%d,%d,%.17g\n", iu, iv, m);
      out += line;
    }
  }
  return out;
}

}  // namespace gcensus
