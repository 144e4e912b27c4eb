#pragma once

#include <string>
#include <vector>

#include "gcensus/census.hpp"
#include "gcensus/surface.hpp"
#include "gcensus/words.hpp"

namespace gcensus {

// One unit of arc-length mass on the unit tangent bundle: a reduced
// fundamental-domain position, a direction angle in the half-plane chart at
// that point, and a weight.
struct PhaseSample {
  double u = 0.0;
  double v = 1.0;
  double theta = 0.0;  // [0, 2*pi)
  double weight = 0.0;
};

// Uniform boxes over [u_min,u_max] x [v_min,v_max] x [0,2*pi). Out-of-box
// positions are clamped into the boundary cells so mass is conserved; the
// angle bin count must be even so the flip is a bin bijection.
struct BinningSpec {
  double u_min = -3.0, u_max = 3.0;
  double v_min = 0.0, v_max = 4.5;
  int nu = 12, nv = 12, ntheta = 16;

  bool operator==(const BinningSpec&) const = default;
  std::size_t cells() const {
    return std::size_t(nu) * std::size_t(nv) * std::size_t(ntheta);
  }
};

BinningSpec default_binning();

struct PhaseHistogram {
  BinningSpec spec;
  std::vector<double> mass;  // nu * nv * ntheta, theta fastest
  double total_mass = 0.0;
  std::string provenance;

  double& at(int iu, int iv, int it);
  double at(int iu, int iv, int it) const;
};

// Arc-length samples along the closed geodesic of c, step delta, each point
// emitted twice with angles theta and theta + pi at half weight (the flip
// symmetrization), reduced into the fundamental domain. Total weight is the
// curve length, the last step being truncated. Throws NotHyperbolic.
std::vector<PhaseSample> sample_orbit(const SurfaceStructure& s,
                                      const CurveClass& c, double delta);

// Mass-conserving aggregation of sample_orbit over every census entry.
// Deterministic for fixed inputs, independent of worker count. Flip
// symmetry holds bin-for-bin exactly.
PhaseHistogram build_histogram(const SurfaceStructure& s, const Census& census,
                               double delta, const BinningSpec& spec,
                               int workers = 1);

// Half the L1 distance between the mass-normalized histograms, in [0, 1].
// Throws BinningMismatch unless the specs agree.
double tv_distance(const PhaseHistogram& h1, const PhaseHistogram& h2);

// Occupied-cell counts of the same census sampled once and rebinned with
// all bin counts scaled by each resolution factor.
std::vector<std::size_t> occupancy_profile(const SurfaceStructure& s,
                                           const Census& census, double delta,
                                           const BinningSpec& base,
                                           const std::vector<int>& resolutions,
                                           int workers = 1);

// CSV of nonzero cells (u_bin, v_bin, theta_bin, mass).
std::string histogram_csv(const PhaseHistogram& h, const std::string& config_hash);
// JSON sidecar carrying the binning spec and provenance.
std::string histogram_sidecar_json(const PhaseHistogram& h,
                                   const std::string& config_hash);
// Plot-ready marginals: mass against the angle bin, and against position.
std::string marginal_theta_csv(const PhaseHistogram& h);
std::string marginal_position_csv(const PhaseHistogram& h);

}  // namespace gcensus
