#pragma once

#include <stdexcept>
#include <string>

namespace gcensus {

// Common base so callers can catch any domain error from this library with
// one handler while still discriminating by concrete type when needed.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define GCENSUS_DEFINE_ERROR(NAME)                                  \
  class NAME : public Error {                                       \
   public:                                                          \
    explicit NAME(const std::string& what) : Error(#NAME ": " + what) {} \
  }

// Matrix is parabolic or elliptic where a hyperbolic one is required
// (e.g. a peripheral class handed to a length computation).
GCENSUS_DEFINE_ERROR(NotHyperbolic);
// Trace coordinates admit no real completion z.
GCENSUS_DEFINE_ERROR(NoRealSolution);
// A completed trace landed on or inside the parabolic bound |t| <= 2.
GCENSUS_DEFINE_ERROR(DegenerateTrace);
// Greedy domain reduction failed to settle within its iteration cap.
GCENSUS_DEFINE_ERROR(NonTermination);
// A word reduced to the identity, which names no curve.
GCENSUS_DEFINE_ERROR(TrivialWord);
// No curve fits below the requested length cutoff.
GCENSUS_DEFINE_ERROR(CutoffTooSmall);
// Orbit enumeration was seeded with a cusp-parallel class.
GCENSUS_DEFINE_ERROR(SeedPeripheral);
// An enumeration exceeded its configured node or visited-set budget.
GCENSUS_DEFINE_ERROR(BudgetExceeded);
// The empirical length-per-letter lower bound was violated by an
// enumerated class; the bound must be recalibrated before trusting results.
GCENSUS_DEFINE_ERROR(CalibrationFailure);
// A statistics grid asks for counts beyond the census cutoff.
GCENSUS_DEFINE_ERROR(GridExceedsCutoff);
// Too few usable points for a requested fit.
GCENSUS_DEFINE_ERROR(InsufficientData);
// A ratio or estimate was requested at a level where the census is empty.
GCENSUS_DEFINE_ERROR(EmptyCensus);
// Two histograms with different binning specs were compared.
GCENSUS_DEFINE_ERROR(BinningMismatch);
// A census entry evaluates to a parabolic on the comparison target.
GCENSUS_DEFINE_ERROR(PeripheralOnTarget);
// Invalid or out-of-range configuration input.
GCENSUS_DEFINE_ERROR(ConfigError);

#undef GCENSUS_DEFINE_ERROR

}  // namespace gcensus
