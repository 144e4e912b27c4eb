#include "gcensus/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

#include "gcensus/census.hpp"
#include "gcensus/compare.hpp"
#include "gcensus/errors.hpp"
#include "gcensus/io.hpp"
#include "gcensus/phase.hpp"
#include "gcensus/self_intersection.hpp"
#include "gcensus/stats.hpp"
#include "gcensus/surface.hpp"
#include "gcensus/words.hpp"

namespace gcensus {

namespace {

std::string fmt(const char* pattern, ...) {
  char buf[512];
  va_list args;
  va_start(args, pattern);
  std::vsnprintf(buf, sizeof(buf), pattern, args);
  va_end(args);
  return buf;
}

OrbitOptions orbit_options(int workers) {
  OrbitOptions o;
  o.workers = workers;
  return o;
}

// --- 1. Polynomial growth of the embedded-curve count -----------------------
// The count N(L) of embedded classes below L must grow like L^d with d = 2:
// log-log slope in [1.85, 2.15] with r^2 >= 0.99 over the window [15, 45],
// measured in under 30 seconds.
CriterionResult counting_exponent(int workers) {
  (void)workers;
  CriterionResult r{1, "counting-exponent"};
  const auto t0 = std::chrono::steady_clock::now();
  const SurfaceStructure s = modular_torus();
  const Census census = enumerate_simple(s, 45.0);
  const CountingCurve cc = counting_curve(census, uniform_grid(15.0, 45.0, 3.0));
  const ExponentFit fit = fit_exponent(cc, 15.0, 45.0);
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  const bool slope_ok = fit.slope >= 1.85 && fit.slope <= 2.15;
  const bool fit_ok = fit.r2 >= 0.99;
  const bool time_ok = seconds < 30.0;
  r.passed = slope_ok && fit_ok && time_ok;
  r.detail = fmt("slope=%.4f (need [1.85,2.15]), r2=%.6f (need >=0.99), "
                 "points=%zu, census N(45)=%zu, %.2fs (need <30s)",
                 fit.slope, fit.r2, fit.points, census.entries.size(), seconds);
  return r;
}

// --- 2. Mean length approaches d/(d+1) of the cutoff -------------------------
// total_length(L) / (L * N(L)) at L = 45 must sit within 2/3 +- 0.05 for the
// embedded census and for the orbit census seeded at "aab".
CriterionResult average_length_fraction(int workers) {
  CriterionResult r{2, "average-length-fraction"};
  const SurfaceStructure s = modular_torus();
  const double L = 45.0;
  const Census simple = enumerate_simple(s, L);
  const Census orbit =
      enumerate_type(s, CurveClass::parse("aab"), L, orbit_options(workers));
  const double ratio_simple =
      average_length_fraction(counting_curve(simple, {L}), L);
  const double ratio_orbit = average_length_fraction(counting_curve(orbit, {L}), L);
  const double target = double(s.d) / double(s.d + 1);
  const double tol = 0.05;
  r.passed = std::abs(ratio_simple - target) <= tol &&
             std::abs(ratio_orbit - target) <= tol;
  r.detail = fmt("embedded=%.6f, aab-orbit=%.6f, target=%.6f+-%.2f "
                 "(orbit census: %zu classes)",
                 ratio_simple, ratio_orbit, target, tol, orbit.entries.size());
  return r;
}

// Multicurve count by direct integer-direction scan: every multiple k of
// every primitive homology direction with k * length <= L, enumerated ring
// by ring over |p| + q = n until three consecutive rings contribute nothing.
// Independent of the Farey-descent census machinery.
std::size_t direction_scan_count(const SurfaceStructure& s, double L) {
  std::size_t total = 0;
  int empty_streak = 0;
  for (long long n = 1; empty_streak < 3; ++n) {
    bool any = false;
    for (long long p = -n; p <= n; ++p) {
      const long long q = n - std::llabs(p);
      if (q == 0 && p <= 0) continue;  // (p,0) ~ (-p,0): keep one
      if (std::gcd(std::llabs(p), q) != 1) continue;
      const double len = curve_length(s, simple_from_slope(normalize_slope(p, q)));
      const auto k = static_cast<std::size_t>(std::floor((L + 1e-9) / len));
      if (k > 0) any = true;
      total += k;
    }
    empty_streak = any ? 0 : empty_streak + 1;
  }
  return total;
}

// --- 3. Ball-volume constant ------------------------------------------------
// N(L) / (L^d * ball(L)) must approach 6/pi^2 (within 0.05 at L = 40, with
// under 10% drift between L = 30 and 45), and the weighted multicurve counts
// must agree exactly with the brute-force integer-direction scan for L <= 25.
CriterionResult ball_volume_constant(int workers) {
  (void)workers;
  CriterionResult r{3, "ball-volume-constant"};
  const SurfaceStructure s = modular_torus();
  const Census simple = enumerate_simple(s, 45.0);
  const CountingCurve cc = counting_curve(simple, {30.0, 40.0, 45.0});

  const double c30 = estimate_C(cc, thurston_ball(s, 30.0, &simple), 30.0, s.d);
  const double c40 = estimate_C(cc, thurston_ball(s, 40.0, &simple), 40.0, s.d);
  const double c45 = estimate_C(cc, thurston_ball(s, 45.0, &simple), 45.0, s.d);
  const double target = 6.0 / (std::acos(-1.0) * std::acos(-1.0));
  const double drift = std::abs(c45 - c30) / c30;

  bool oracle_ok = true;
  std::string oracle_note;
  for (double L : {10.0, 15.0, 20.0, 25.0}) {
    const std::size_t weighted = thurston_ball(s, L, &simple).weighted_count;
    const std::size_t floored = lattice_weighted_count(simple, L);
    const std::size_t scanned = direction_scan_count(s, L);
    if (weighted != floored || weighted != scanned) {
      oracle_ok = false;
      oracle_note += fmt(" L=%g:(%zu,%zu,%zu)", L, weighted, floored, scanned);
    }
  }

  r.passed = std::abs(c40 - target) <= 0.05 && drift < 0.10 && oracle_ok;
  r.detail = fmt("C(40)=%.6f vs %.6f+-0.05, drift(30->45)=%.2f%% (need <10%%), "
                 "integer-scan cross-check %s%s",
                 c40, target, 100.0 * drift,
                 oracle_ok ? "exact for L in {10,15,20,25}" : "MISMATCH",
                 oracle_note.c_str());
  return r;
}

// --- 4. Seed independence of the equidistribution limit ----------------------
// Normalized phase histograms of the embedded census and the "aab" orbit
// census must converge toward each other: total-variation distance
// non-increasing along L in {15,25,35,45} (slack 0.01) and below 0.2 at 45.
CriterionResult seed_independence(int workers) {
  CriterionResult r{4, "seed-independence"};
  const SurfaceStructure s = modular_torus();
  const BinningSpec bins = default_binning();
  const double delta = 0.05;
  std::vector<double> tv;
  std::string trace;
  for (double L : {15.0, 25.0, 35.0, 45.0}) {
    const Census simple = enumerate_simple(s, L);
    const Census orbit =
        enumerate_type(s, CurveClass::parse("aab"), L, orbit_options(workers));
    const PhaseHistogram h1 = build_histogram(s, simple, delta, bins, workers);
    const PhaseHistogram h2 = build_histogram(s, orbit, delta, bins, workers);
    tv.push_back(tv_distance(h1, h2));
    trace += fmt(" tv(%g)=%.6f", L, tv.back());
  }
  bool monotone = true;
  for (std::size_t i = 1; i < tv.size(); ++i) {
    monotone = monotone && tv[i] <= tv[i - 1] + 0.01;
  }
  r.passed = monotone && tv.back() < 0.2;
  r.detail = fmt("%s; non-increasing(slack 0.01)=%s, final<0.2=%s",
                 trace.c_str() + 1, monotone ? "yes" : "NO",
                 tv.back() < 0.2 ? "yes" : "NO");
  return r;
}

bool exactly_flip_symmetric(const PhaseHistogram& h) {
  const int half = h.spec.ntheta / 2;
  for (int iu = 0; iu < h.spec.nu; ++iu) {
    for (int iv = 0; iv < h.spec.nv; ++iv) {
      for (int it = 0; it < h.spec.ntheta; ++it) {
        if (h.at(iu, iv, it) != h.at(iu, iv, (it + half) % h.spec.ntheta)) {
          return false;
        }
      }
    }
  }
  return true;
}

// --- 5. Exact flip symmetry ---------------------------------------------------
// Every histogram the pipeline produces must equal its own half-turn image in
// the direction coordinate, with zero tolerance: the direction-reversal
// involution is built into the sampler, not approximated by it.
CriterionResult flip_symmetry(int workers) {
  CriterionResult r{5, "flip-symmetry"};
  const SurfaceStructure s = modular_torus();
  const BinningSpec bins = default_binning();
  int checked = 0;
  bool all_ok = true;
  const Census simple15 = enumerate_simple(s, 15.0);
  const Census simple25 = enumerate_simple(s, 25.0);
  const Census orbit =
      enumerate_type(s, CurveClass::parse("aab"), 15.0, orbit_options(workers));
  for (const Census* census : {&simple15, &simple25, &orbit}) {
    for (double delta : {0.05, 0.025}) {
      const PhaseHistogram h = build_histogram(s, *census, delta, bins, workers);
      all_ok = all_ok && exactly_flip_symmetric(h);
      ++checked;
    }
  }
  r.passed = all_ok && checked == 6;
  r.detail = fmt("%d histograms (3 censuses x 2 step sizes) %s bin-exact "
                 "half-turn symmetry at tolerance 0",
                 checked, all_ok ? "satisfy" : "VIOLATE");
  return r;
}

// Every cyclically reduced class of word length <= maxlen, powers included.
std::vector<CurveClass> all_classes_up_to(int maxlen) {
  std::set<CurveClass> seen;
  std::vector<Letter> word;
  std::function<void()> descend = [&] {
    if (!word.empty() && inverse_letter(word.front()) != word.back()) {
      seen.insert(CurveClass::from_letters(word));
    }
    if (static_cast<int>(word.size()) == maxlen) return;
    for (Letter l = 0; l < 4; ++l) {
      if (!word.empty() && inverse_letter(word.back()) == l) continue;
      word.push_back(l);
      descend();
      word.pop_back();
    }
  };
  descend();
  return {seen.begin(), seen.end()};
}

// --- 6. Self-intersection invariants -----------------------------------------
// (a) Orbit censuses are homogeneous: every entry carries the seed's
// self-intersection count. (b) The combinatorial count agrees with the
// metric-level crossing count on every class of word length <= 8 whose
// primitive root has an axis; cusp-parallel roots are checked against frozen
// values instead (their crossing geometry degenerates).
CriterionResult intersection_invariants(int workers) {
  CriterionResult r{6, "intersection-invariants"};
  const SurfaceStructure s = modular_torus();

  bool orbits_ok = true;
  std::string orbit_note;
  const struct {
    const char* seed;
    double L;
  } orbit_cases[] = {{"a", 20.0}, {"aab", 20.0}, {"abaB", 12.0}};
  for (const auto& oc : orbit_cases) {
    const CurveClass seed = CurveClass::parse(oc.seed);
    const int seed_si = self_intersection(seed);
    const Census census = enumerate_type(s, seed, oc.L, orbit_options(workers));
    for (const CensusEntry& e : census.entries) {
      if (e.self_intersection != seed_si ||
          self_intersection(e.cls) != seed_si) {
        orbits_ok = false;
      }
    }
    orbit_note += fmt(" %s:si=%d,n=%zu", oc.seed, seed_si,
                      census.entries.size());
  }

  const std::vector<CurveClass> classes = all_classes_up_to(8);
  const std::map<std::string, int> frozen_peripheral = {
      {"abAB", 0},         // the cusp class itself
      {"abABabAB", 1}};    // its square: k^2 * 0 + (k - 1)
  std::size_t compared = 0, peripheral = 0;
  bool agree = true;
  for (const CurveClass& c : classes) {
    const int combinatorial = self_intersection(c);
    if (is_peripheral(s, c)) {
      ++peripheral;
      const auto it = frozen_peripheral.find(c.str());
      if (it == frozen_peripheral.end() || it->second != combinatorial) {
        agree = false;
      }
      continue;
    }
    if (self_intersection_geometric(s, c) != combinatorial) {
      agree = false;
    }
    ++compared;
  }

  r.passed = orbits_ok && agree;
  r.detail = fmt("orbits homogeneous=%s (%s); axis-crossing oracle agrees on "
                 "%zu classes of word length <=8 (+%zu cusp-parallel against "
                 "frozen values): %s",
                 orbits_ok ? "yes" : "NO", orbit_note.c_str() + 1, compared,
                 peripheral, agree ? "yes" : "NO");
  return r;
}

// --- 7. Orbit census reproduces the embedded census ---------------------------
// Breadth-first orbit closure seeded at "a" must equal the exact slope
// enumeration as a set of classes for L <= 30 with the default margin.
CriterionResult orbit_census_equivalence(int workers) {
  CriterionResult r{7, "orbit-census-equivalence"};
  const SurfaceStructure s = modular_torus();
  const double L = 30.0;
  const Census direct = enumerate_simple(s, L);
  const Census orbit =
      enumerate_type(s, CurveClass::parse("a"), L, orbit_options(workers));
  bool equal = direct.entries.size() == orbit.entries.size();
  double max_len_diff = 0.0;
  if (equal) {
    for (std::size_t i = 0; i < direct.entries.size(); ++i) {
      if (!(direct.entries[i].cls == orbit.entries[i].cls)) {
        equal = false;
        break;
      }
      max_len_diff = std::max(
          max_len_diff,
          std::abs(direct.entries[i].length - orbit.entries[i].length));
    }
  }
  r.passed = equal && max_len_diff <= 1e-9;
  r.detail = fmt("direct=%zu classes, orbit=%zu classes, set-equal=%s, "
                 "max length diff=%.2e",
                 direct.entries.size(), orbit.entries.size(),
                 equal ? "yes" : "NO", max_len_diff);
  return r;
}

// --- 8. Support contrast of the full census ----------------------------------
// The all-primitive census at L = 30 should occupy at least twice the phase
// cells of the embedded census. The full census at L = 30 holds on the order
// of e^L / L ~ 4e11 classes — far beyond the 1e7-node enumeration budget —
// so the measurement at the stated scale is expected to be unreachable; the
// check reports the budget failure honestly and records the same contrast at
// the largest feasible scale as supporting evidence.
CriterionResult full_census_contrast(int workers) {
  CriterionResult r{8, "full-census-contrast"};
  const SurfaceStructure s = modular_torus();
  const BinningSpec bins = default_binning();
  const double delta = 0.05;
  // Either resource guard can fire first at L=30 depending on traversal
  // order: the raw subtree count (~e^30/30 = 3.6e11 classes against a 1e7
  // node budget) trips BudgetExceeded, while reaching the known violator of
  // the short-word length-per-letter calibration trips CalibrationFailure.
  // Both mean the same thing here: the full census at this scale is out of
  // reach, so the criterion reports honest failure plus feasible-scale
  // evidence instead of a silently truncated census.
  const auto feasible_fallback = [&](const char* guard) {
    const double feasible_L = 6.0;
    const Census full = enumerate_all_primitive(s, feasible_L);
    const Census embedded = enumerate_simple(s, feasible_L);
    const auto occ_full =
        occupancy_profile(s, full, delta, bins, {1, 2}, workers);
    const auto occ_embedded =
        occupancy_profile(s, embedded, delta, bins, {1, 2}, workers);
    r.passed = false;
    r.detail = fmt(
        "L=30 full census is out of reach (%s): ~e^30/30 = 3.6e11 primitive "
        "classes vs 1e7 node budget, and the short-word length calibration "
        "is violated by winding classes before the budget is reached. "
        "Feasible-scale evidence at L=%g: occupied cells full=%zu vs "
        "embedded=%zu (%.1fx; 2x required), at doubled resolution "
        "%zu vs %zu (%.1fx)",
        guard, feasible_L, occ_full[0], occ_embedded[0],
        double(occ_full[0]) / double(occ_embedded[0]), occ_full[1],
        occ_embedded[1], double(occ_full[1]) / double(occ_embedded[1]));
  };
  try {
    const Census full = enumerate_all_primitive(s, 30.0);
    const Census embedded = enumerate_simple(s, 30.0);
    const auto occ_full =
        occupancy_profile(s, full, delta, bins, {1}, workers);
    const auto occ_embedded =
        occupancy_profile(s, embedded, delta, bins, {1}, workers);
    r.passed = occ_full[0] >= 2 * occ_embedded[0];
    r.detail = fmt("occupied cells at L=30: full=%zu, embedded=%zu (need 2x)",
                   occ_full[0], occ_embedded[0]);
  } catch (const BudgetExceeded&) {
    feasible_fallback("BudgetExceeded");
  } catch (const CalibrationFailure&) {
    feasible_fallback("CalibrationFailure");
  }
  return r;
}

// --- 9. Length-spectrum rigidity ----------------------------------------------
// A structure compared against itself must read isometric with unit ratios;
// against the (3,4) torus the verdict must be distinct with length ratios
// straddling 1 beyond the tolerance on both sides.
CriterionResult isometry_rigidity(int workers) {
  CriterionResult r{9, "isometry-rigidity"};
  const SurfaceStructure s = modular_torus();
  const SurfaceStructure t = build_surface(3.0, 4.0);
  const Census census = enumerate_simple(s, 30.0);
  const CompareReport same = compare_structures(s, s, census, 0.005, workers);
  const CompareReport diff = compare_structures(s, t, census, 0.005, workers);
  const bool same_ok = same.verdict == CompareVerdict::kIsometricWithinTol &&
                       std::abs(same.ratio_sup - 1.0) <= 1e-9 &&
                       std::abs(same.ratio_inf - 1.0) <= 1e-9;
  const bool diff_ok = diff.verdict == CompareVerdict::kDistinct &&
                       diff.ratio_sup > 1.01 && diff.ratio_inf < 0.99;
  r.passed = same_ok && diff_ok;
  r.detail = fmt("self: %s with ratios [%.9f, %.9f]; vs torus(3,4): %s with "
                 "ratios [%.4f, %.4f] (need sup>1.01, inf<0.99)",
                 verdict_name(same.verdict), same.ratio_inf, same.ratio_sup,
                 verdict_name(diff.verdict), diff.ratio_inf, diff.ratio_sup);
  return r;
}

// --- 10. Worker-count determinism ----------------------------------------------
// The artifact bundle of a verification run must be byte-identical whether
// it is produced with 1 worker or 8.
CriterionResult worker_determinism(int workers) {
  (void)workers;
  CriterionResult r{10, "worker-determinism"};
  const auto bundle1 = produce_artifact_bundle(1);
  const auto bundle8 = produce_artifact_bundle(8);
  bool equal = bundle1.size() == bundle8.size();
  std::string first_diff;
  if (equal) {
    for (const auto& [name, bytes] : bundle1) {
      const auto it = bundle8.find(name);
      if (it == bundle8.end() || it->second != bytes) {
        equal = false;
        first_diff = name;
        break;
      }
    }
  }
  std::size_t total = 0;
  for (const auto& [name, bytes] : bundle1) total += bytes.size();
  r.passed = equal;
  r.detail = equal ? fmt("%zu artifacts, %zu bytes, byte-identical for "
                         "workers 1 and 8",
                         bundle1.size(), total)
                   : fmt("bundles differ%s%s", first_diff.empty() ? "" : " at ",
                         first_diff.c_str());
  return r;
}

}  // namespace

std::map<std::string, std::string> produce_artifact_bundle(int workers) {
  const SurfaceStructure s = modular_torus();
  const SurfaceStructure t = build_surface(3.0, 4.0);
  ExperimentConfig cfg;
  cfg.cutoff = 25.0;
  cfg.grid = uniform_grid(5.0, 25.0, 2.5);
  cfg.workers = workers;
  const std::string hash = config_hash(cfg);

  std::map<std::string, std::string> files;
  files["surface.json"] = surface_to_json(s);

  const Census simple = enumerate_simple(s, cfg.cutoff);
  files["census_embedded.csv"] = census_to_csv(simple, hash);

  const Census orbit = enumerate_type(s, CurveClass::parse("aab"), 15.0,
                                      orbit_options(workers));
  files["census_orbit.csv"] = census_to_csv(orbit, hash);

  const CountingCurve cc = counting_curve(simple, cfg.grid);
  files["stats.csv"] = stats_csv(s, cc, hash);
  files["stats_summary.json"] = stats_summary_json(s, simple, cc, hash);

  const Census simple15 = enumerate_simple(s, 15.0);
  const PhaseHistogram h =
      build_histogram(s, simple15, cfg.delta, cfg.binning, workers);
  files["histogram.csv"] = histogram_csv(h, hash);
  files["histogram_meta.json"] = histogram_sidecar_json(h, hash);
  files["marginal_theta.csv"] = marginal_theta_csv(h);
  files["marginal_position.csv"] = marginal_position_csv(h);

  const Census simple20 = enumerate_simple(s, 20.0);
  const CompareReport rep =
      compare_structures(s, t, simple20, cfg.tolerance, workers);
  files["compare.json"] = compare_report_json(rep, hash);
  files["compare_rows.csv"] = compare_rows_csv(rep, hash);
  return files;
}

CriterionResult run_criterion(int index, int workers) {
  using Fn = CriterionResult (*)(int);
  static constexpr Fn table[kCriterionCount] = {
      counting_exponent,    average_length_fraction, ball_volume_constant,
      seed_independence,    flip_symmetry,           intersection_invariants,
      orbit_census_equivalence, full_census_contrast, isometry_rigidity,
      worker_determinism};
  if (index < 1 || index > kCriterionCount) {
    throw std::out_of_range("criterion index must lie in [1, 10]");
  }
  const auto t0 = std::chrono::steady_clock::now();
  CriterionResult r;
  try {
    r = table[index - 1](workers);
  } catch (const std::exception& e) {
    r.index = index;
    r.name = "criterion-" + std::to_string(index);
    r.passed = false;
    r.detail = std::string("unexpected error: ") + e.what();
  }
  r.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return r;
}

std::vector<CriterionResult> run_all_criteria(int workers) {
  std::vector<CriterionResult> results;
  results.reserve(kCriterionCount);
  for (int i = 1; i <= kCriterionCount; ++i) {
    results.push_back(run_criterion(i, workers));
  }
  return results;
}

std::string format_result_line(const CriterionResult& r) {
  return fmt("%s %2d %-26s %s  [%.2fs]", r.passed ? "PASS" : "FAIL", r.index,
             r.name.c_str(), r.detail.c_str(), r.seconds);
}

}  // namespace gcensus
