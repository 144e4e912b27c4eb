#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gcensus/surface.hpp"
#include "gcensus/words.hpp"

namespace gcensus {

enum class CensusMode { kSimpleExact, kOrbitBfs, kAllPrimitive };

const char* census_mode_name(CensusMode mode);

// Inverse of census_mode_name; throws ConfigError on an unknown name.
CensusMode census_mode_from_name(const std::string& name);

struct CensusEntry {
  CurveClass cls;
  double length = 0.0;
  int self_intersection = 0;
};

// All curves of one type with length <= L on one structure. Entries are
// distinct classes sorted by (length, representative word), so equal inputs
// serialize to identical bytes.
struct Census {
  std::string surface_label;
  CurveClass seed;
  double cutoff = 0.0;
  CensusMode mode = CensusMode::kSimpleExact;
  double margin = 0.0;  // meaningful for orbit BFS only
  std::vector<CensusEntry> entries;
  // Orbit-BFS audit trail, aligned with entries: the move indices (into
  // standard_moves()) that rebuild each entry from the seed. Empty in the
  // other modes.
  std::vector<std::vector<int>> trails;

  std::size_t count_up_to(double length) const;  // lengths <= length + 1e-9
  double total_length_up_to(double length) const;
};

// A generating automorphism of the free group that fixes the puncture:
// images of the generators a and b as words.
struct MCGMove {
  std::string name;
  std::vector<Letter> image_a;
  std::vector<Letter> image_b;

  std::vector<Letter> apply(const std::vector<Letter>& word) const;
};

// The seven standard moves: a -> ab, a -> ab^-1, b -> ba, b -> ba^-1, the
// swap a <-> b, and the two inversions. Each is checked (once) to send the
// commutator to a conjugate of itself or its inverse.
const std::vector<MCGMove>& standard_moves();

// Replays a move-index trail from a seed; used by the audit-trail check.
CurveClass apply_moves(const CurveClass& seed, const std::vector<int>& trail);

// Exact enumeration of embedded classes with length <= L by Farey descent on
// slopes with the trace recursion t(u+v) = t(u)*t(v) - t(u-v). A subtree is
// pruned once its traces are monotone and above 2*cosh(L/2); monotonicity is
// asserted at runtime once established. Throws CutoffTooSmall if no curve
// qualifies.
Census enumerate_simple(const SurfaceStructure& s, double L);

struct OrbitOptions {
  double margin = 0.5;
  std::size_t visited_cap = 10'000'000;
  int workers = 1;
};

// Breadth-first closure of the seed's mapping-class-group orbit: expands
// every class of length <= L*(1+margin) and keeps those of length <= L.
// Every entry's self-intersection number is asserted equal to the seed's.
// Throws SeedPeripheral, CutoffTooSmall (seed longer than L), or
// BudgetExceeded (visited set exceeded its cap).
Census enumerate_type(const SurfaceStructure& s, const CurveClass& seed,
                      double L, const OrbitOptions& options = {});

struct PrimitiveOptions {
  std::size_t node_budget = 10'000'000;
  // Word lengths are capped by an empirical lower bound
  // length >= c * wordlength, calibrated on all words up to this length and
  // asserted on every emitted class (CalibrationFailure on violation).
  std::size_t calibration_wordlength = 12;
};

// Every primitive non-peripheral class with length <= L, enumerated over
// reduced words with a displacement prune. Throws CalibrationFailure or
// BudgetExceeded as above, CutoffTooSmall when empty.
Census enumerate_all_primitive(const SurfaceStructure& s, double L,
                               const PrimitiveOptions& options = {});

// CSV with provenance comment lines; 17 significant digits on lengths.
std::string census_to_csv(const Census& census, const std::string& config_hash);

}  // namespace gcensus
