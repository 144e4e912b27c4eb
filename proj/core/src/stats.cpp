#include "gcensus/stats.hpp"

#include <cmath>
#include <cstdio>

#include <nlohmann/json.hpp>

#include "gcensus/errors.hpp"
#include "gcensus/version.hpp"

namespace gcensus {

namespace {
constexpr double kLengthGuard = 1e-9;
}

CountingCurve counting_curve(const Census& census, const std::vector<double>& grid) {
  CountingCurve cc;
  cc.grid = grid;
  cc.counts.reserve(grid.size());
  cc.total_lengths.reserve(grid.size());
  for (double L : grid) {
    if (L > census.cutoff + kLengthGuard) {
      throw GridExceedsCutoff("grid point beyond census cutoff");
    }
    cc.counts.push_back(census.count_up_to(L));
    cc.total_lengths.push_back(census.total_length_up_to(L));
  }
  return cc;
}

std::vector<double> uniform_grid(double from, double to, double step) {
  if (!(step > 0.0) || !(to >= from)) {
    throw ConfigError("grid requires positive step and to >= from");
  }
  std::vector<double> grid;
  for (double L = from; L <= to + 1e-12; L += step) {
    grid.push_back(L);
  }
  return grid;
}

ExponentFit fit_exponent(const CountingCurve& cc, double window_lo,
                         double window_hi) {
  std::vector<double> xs, ys;
  for (std::size_t i = 0; i < cc.grid.size(); ++i) {
    const double L = cc.grid[i];
    if (L < window_lo - 1e-12 || L > window_hi + 1e-12 || cc.counts[i] == 0) {
      continue;
    }
    xs.push_back(std::log(L));
    ys.push_back(std::log(static_cast<double>(cc.counts[i])));
  }
  if (xs.size() < 5) {
    throw InsufficientData("need at least 5 nonzero grid points in window");
  }
  const std::size_t n = xs.size();
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= double(n);
  my /= double(n);
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = xs[i] - mx;
    const double dy = ys[i] - my;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  ExponentFit fit;
  fit.slope = sxy / sxx;
  fit.r2 = syy == 0.0 ? 1.0 : (sxy * sxy) / (sxx * syy);
  fit.points = n;
  return fit;
}

double average_length_fraction(const CountingCurve& cc, double L) {
  for (std::size_t i = 0; i < cc.grid.size(); ++i) {
    if (std::abs(cc.grid[i] - L) <= 1e-9) {
      if (cc.counts[i] == 0) {
        throw EmptyCensus("no curves at or below the requested level");
      }
      return cc.total_lengths[i] / (L * static_cast<double>(cc.counts[i]));
    }
  }
  throw InsufficientData("requested level is not a grid point");
}

ThurstonBallEstimate thurston_ball(const SurfaceStructure& s, double L,
                                   const Census* simple_census) {
  Census local;
  if (simple_census == nullptr) {
    local = enumerate_simple(s, L);  // CutoffTooSmall below the systole
    simple_census = &local;
  } else if (simple_census->cutoff + kLengthGuard < L) {
    throw GridExceedsCutoff("provided census is shorter than the request");
  }
  const double systole = simple_census->entries.front().length;
  if (L < systole) {
    throw CutoffTooSmall("level below the systole");
  }
  ThurstonBallEstimate tb;
  tb.L = L;
  for (std::size_t k = 1; L / static_cast<double>(k) + kLengthGuard >= systole;
       ++k) {
    tb.weighted_count +=
        simple_census->count_up_to(L / static_cast<double>(k));
  }
  tb.estimate =
      static_cast<double>(tb.weighted_count) / std::pow(L, double(s.d));
  return tb;
}

std::size_t lattice_weighted_count(const Census& simple_census, double L) {
  std::size_t count = 0;
  for (const CensusEntry& e : simple_census.entries) {
    if (e.length <= L + kLengthGuard) {
      count += static_cast<std::size_t>((L + kLengthGuard) / e.length);
    }
  }
  return count;
}

double estimate_C(const CountingCurve& cc, const ThurstonBallEstimate& ball,
                  double L, int d) {
  for (std::size_t i = 0; i < cc.grid.size(); ++i) {
    if (std::abs(cc.grid[i] - L) <= 1e-9) {
      const double nl = static_cast<double>(cc.counts[i]);
      return (nl / std::pow(L, double(d))) / ball.estimate;
    }
  }
  throw InsufficientData("requested level is not a grid point");
}

std::string stats_csv(const SurfaceStructure& s, const CountingCurve& cc,
                      const std::string& config_hash) {
  std::string out;
  out += std::string("# geodesic-census v") + kVersion + "\n";
  out += "# config " + config_hash + "\n";
  out += "# surface " + s.label + "\n";
  out += "L,N,total_length,ratio,ball_estimate,C_estimate\n";
  Census simple;
  bool have_simple = false;
  char line[224];
  for (std::size_t i = 0; i < cc.grid.size(); ++i) {
    const double L = cc.grid[i];
    const std::size_t n = cc.counts[i];
    const double tl = cc.total_lengths[i];
    double ratio = 0.0;
    double ball = 0.0;
    double cest = 0.0;
    if (n > 0) {
      if (!have_simple) {
        simple = enumerate_simple(s, cc.grid.back());
        have_simple = true;
      }
      ratio = tl / (L * static_cast<double>(n));
      const ThurstonBallEstimate tb = thurston_ball(s, L, &simple);
      ball = tb.estimate;
      cest = (static_cast<double>(n) / std::pow(L, double(s.d))) / ball;
    }
    std::snprintf(line, sizeof(line), "%.17g,%zu,%.17g,%.17g,%.17g,%.17g\n", L,
                  n, tl, ratio, ball, cest);
    out += line;
  }
  return out;
}

std::string stats_summary_json(const SurfaceStructure& s, const Census& census,
                               const CountingCurve& cc,
                               const std::string& config_hash) {
  nlohmann::json j;
  j["version"] = kVersion;
  j["config_hash"] = config_hash;
  j["surface"] = s.label;
  j["seed"] = census.seed.str();
  j["mode"] = census_mode_name(census.mode);
  j["cutoff"] = census.cutoff;
  j["classes"] = census.entries.size();
  const double Lmax = cc.grid.empty() ? census.cutoff : cc.grid.back();
  try {
    const ExponentFit fit = fit_exponent(cc, Lmax / 3.0, Lmax);
    j["fit_window"] = {Lmax / 3.0, Lmax};
    j["fit_slope"] = fit.slope;
    j["fit_r2"] = fit.r2;
  } catch (const InsufficientData&) {
    j["fit_slope"] = nullptr;
  }
  if (!cc.grid.empty() && cc.counts.back() > 0) {
    j["length_ratio"] = average_length_fraction(cc, cc.grid.back());
    j["length_ratio_target"] =
        double(s.d) / double(s.d + 1);
    const ThurstonBallEstimate tb = thurston_ball(s, Lmax);
    j["ball_estimate"] = tb.estimate;
    j["C_estimate"] = estimate_C(cc, tb, Lmax, s.d);
  }
  return j.dump(2) + "\n";
}

}  // namespace gcensus
