#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gcensus/moebius.hpp"
#include "gcensus/surface.hpp"

namespace gcensus {

// Letters of the rank-2 free group: 0 = a, 1 = a^-1, 2 = b, 3 = b^-1.
// The fixed comparison order is a < a^-1 < b < b^-1, i.e. plain index order.
using Letter = std::int8_t;

inline Letter inverse_letter(Letter l) { return static_cast<Letter>(l ^ 1); }
char letter_to_char(Letter l);
Letter letter_from_char(char c);

// A freely and cyclically reduced word stored in its lexicographically
// minimal rotation. Nonempty.
struct CyclicWord {
  std::vector<Letter> letters;

  std::string str() const;
  std::size_t size() const { return letters.size(); }
  auto operator<=>(const CyclicWord&) const = default;
};

// Reduces and canonically rotates; throws TrivialWord if everything cancels.
CyclicWord canonicalize(std::vector<Letter> letters);

// The canonical form of the inverse word.
CyclicWord word_inverse(const CyclicWord& w);

// Smallest rotation period of the letter sequence; the word is a proper
// power exactly when the period divides the length strictly.
std::size_t smallest_period(const std::vector<Letter>& letters);
bool is_primitive(const CyclicWord& w);

// An unoriented free homotopy class: the smaller of the canonical forms of a
// word and its inverse.
struct CurveClass {
  CyclicWord rep;

  static CurveClass from_letters(std::vector<Letter> letters);
  static CurveClass from_word(const CyclicWord& w);
  // Parses a string over {a, A, b, B}; whitespace and "^-1" markers allowed,
  // e.g. "a a b" or "ab^-1".
  static CurveClass parse(std::string_view text);

  std::string str() const { return rep.str(); }
  std::size_t size() const { return rep.size(); }
  auto operator<=>(const CurveClass&) const = default;
};

// A primitive homology direction (p, q), gcd = 1, normalized to q >= 0 and
// p = 1 when q = 0.
struct Slope {
  long long p = 1;
  long long q = 0;
  auto operator<=>(const Slope&) const = default;
};

Slope normalize_slope(long long p, long long q);

// The unique embedded class in homology direction (p, q), realized as a
// Christoffel word (negative p uses a^-1 in place of a).
CurveClass simple_from_slope(const Slope& s);

// Signed letter counts (#a - #a^-1, #b - #b^-1), normalized to the same
// half-space convention as Slope so it is well defined on unoriented classes.
std::pair<long long, long long> abelianization(const CurveClass& c);

Moebius evaluate_word(const SurfaceStructure& s, const std::vector<Letter>& letters);
Moebius evaluate(const SurfaceStructure& s, const CurveClass& c);

// True iff the class is cusp-parallel: |trace| <= 2 + 1e-9.
bool is_peripheral(const SurfaceStructure& s, const CurveClass& c);

// Geodesic length of the class; throws NotHyperbolic on peripheral input.
double curve_length(const SurfaceStructure& s, const CurveClass& c);

}  // namespace gcensus
