#pragma once

#include <string>
#include <vector>

#include "gcensus/census.hpp"
#include "gcensus/surface.hpp"

namespace gcensus {

// Step-function readings of a census at grid cutoffs.
struct CountingCurve {
  std::vector<double> grid;
  std::vector<std::size_t> counts;
  std::vector<double> total_lengths;
};

// Exact counts and length sums at each grid point. Throws GridExceedsCutoff
// if the grid asks beyond the census cutoff.
CountingCurve counting_curve(const Census& census, const std::vector<double>& grid);

std::vector<double> uniform_grid(double from, double to, double step);

struct ExponentFit {
  double slope = 0.0;
  double r2 = 0.0;
  std::size_t points = 0;
};

// Least-squares slope of log N against log L over grid points inside the
// window with N > 0. Throws InsufficientData below 5 usable points.
ExponentFit fit_exponent(const CountingCurve& cc, double window_lo, double window_hi);

// total_length(L) / (L * N(L)); tends to d/(d+1). Throws EmptyCensus.
double average_length_fraction(const CountingCurve& cc, double L);

struct ThurstonBallEstimate {
  double L = 0.0;
  std::size_t weighted_count = 0;
  double estimate = 0.0;  // weighted_count / L^d
};

// Weighted multicurve count below L: integer multiples k of embedded
// classes, counted via sum_k N_simple(L/k). Throws CutoffTooSmall when L is
// below the systole. An already built simple census at cutoff >= L may be
// passed to avoid rebuilding.
ThurstonBallEstimate thurston_ball(const SurfaceStructure& s, double L,
                                   const Census* simple_census = nullptr);

// Brute-force multicurve count: sum over entries of floor((L + guard)/len).
// Exact cross-check for the weighted count at small L.
std::size_t lattice_weighted_count(const Census& simple_census, double L);

// (N(L)/L^d) / ball_estimate -> the counting constant of the seed's type.
double estimate_C(const CountingCurve& cc, const ThurstonBallEstimate& ball,
                  double L, int d);

// CSV table (L, N, total_length, ratio, ball_estimate, C_estimate).
std::string stats_csv(const SurfaceStructure& s, const CountingCurve& cc,
                      const std::string& config_hash);

// JSON summary with the fitted exponent and headline ratios.
std::string stats_summary_json(const SurfaceStructure& s, const Census& census,
                               const CountingCurve& cc,
                               const std::string& config_hash);

}  // namespace gcensus
