#include "gcensus/words.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "gcensus/errors.hpp"

namespace gcensus {

char letter_to_char(Letter l) {
  static constexpr char kChars[4] = {'a', 'A', 'b', 'B'};
  if (l < 0 || l > 3) {
    throw std::invalid_argument("letter index out of range");
  }
  return kChars[l];
}

Letter letter_from_char(char c) {
  switch (c) {
    case 'a':
      return 0;
    case 'A':
      return 1;
    case 'b':
      return 2;
    case 'B':
      return 3;
    default:
      throw std::invalid_argument(std::string("invalid letter '") + c + "'");
  }
}

std::string CyclicWord::str() const {
  std::string out;
  out.reserve(letters.size());
  for (Letter l : letters) {
    out.push_back(letter_to_char(l));
  }
  return out;
}

namespace {

std::vector<Letter> free_reduce(const std::vector<Letter>& in) {
  std::vector<Letter> out;
  out.reserve(in.size());
  for (Letter l : in) {
    if (!out.empty() && out.back() == inverse_letter(l)) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

// Minimal rotation by direct comparison; words in this project stay short
// enough (a few hundred letters) that the quadratic scan is the simple
// and sufficient choice.
std::vector<Letter> minimal_rotation(const std::vector<Letter>& w) {
  const std::size_t n = w.size();
  std::size_t best = 0;
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const Letter x = w[(i + k) % n];
      const Letter y = w[(best + k) % n];
      if (x != y) {
        if (x < y) {
          best = i;
        }
        break;
      }
    }
  }
  std::vector<Letter> out;
  out.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    out.push_back(w[(best + k) % n]);
  }
  return out;
}

}  // namespace

CyclicWord canonicalize(std::vector<Letter> letters) {
  for (Letter l : letters) {
    if (l < 0 || l > 3) {
      throw std::invalid_argument("letter index out of range");
    }
  }
  std::vector<Letter> w = free_reduce(letters);
  std::size_t lo = 0;
  std::size_t hi = w.size();
  while (hi - lo > 1 && w[lo] == inverse_letter(w[hi - 1])) {
    ++lo;
    --hi;
  }
  w = std::vector<Letter>(w.begin() + lo, w.begin() + hi);
  if (w.empty()) {
    throw TrivialWord("word reduces to the identity");
  }
  return CyclicWord{minimal_rotation(w)};
}

CyclicWord word_inverse(const CyclicWord& w) {
  std::vector<Letter> inv;
  inv.reserve(w.letters.size());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    inv.push_back(inverse_letter(*it));
  }
  return canonicalize(std::move(inv));
}

std::size_t smallest_period(const std::vector<Letter>& letters) {
  const std::size_t n = letters.size();
  for (std::size_t p = 1; p < n; ++p) {
    if (n % p != 0) {
      continue;
    }
    bool ok = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (letters[i] != letters[i % p]) {
        ok = false;
        break;
      }
    }
    if (ok) {
      return p;
    }
  }
  return n;
}

bool is_primitive(const CyclicWord& w) {
  return smallest_period(w.letters) == w.letters.size();
}

CurveClass CurveClass::from_letters(std::vector<Letter> letters) {
  return from_word(canonicalize(std::move(letters)));
}

CurveClass CurveClass::from_word(const CyclicWord& w) {
  CyclicWord canon = canonicalize(w.letters);
  CyclicWord inv = word_inverse(canon);
  return CurveClass{std::min(canon, inv)};
}

CurveClass CurveClass::parse(std::string_view text) {
  std::vector<Letter> letters;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == ' ' || c == '\t') {
      continue;
    }
    if (c == '^') {
      // Accept "x^-1" as the inverse of the previous letter.
      if (letters.empty() || text.substr(i, 3) != "^-1") {
        throw std::invalid_argument("malformed inverse marker in word");
      }
      letters.back() = inverse_letter(letters.back());
      i += 2;
      continue;
    }
    letters.push_back(letter_from_char(c));
  }
  if (letters.empty()) {
    throw TrivialWord("empty curve string");
  }
  return from_letters(std::move(letters));
}

Slope normalize_slope(long long p, long long q) {
  if (p == 0 && q == 0) {
    throw std::invalid_argument("slope (0,0) is not a direction");
  }
  const long long g = std::gcd(std::abs(p), std::abs(q));
  p /= g;
  q /= g;
  if (q < 0 || (q == 0 && p < 0)) {
    p = -p;
    q = -q;
  }
  return Slope{p, q};
}

CurveClass simple_from_slope(const Slope& s) {
  const Slope n = normalize_slope(s.p, s.q);
  if (n.q == 0) {
    return CurveClass::parse("a");
  }
  const long long pa = std::abs(n.p);
  const Letter a_letter = n.p >= 0 ? Letter{0} : Letter{1};
  const long long total = pa + n.q;
  std::vector<Letter> w;
  w.reserve(static_cast<std::size_t>(total));
  // Christoffel word of (|p|, q): letter k is an 'a' exactly when the line
  // of slope q/(|p|+q) crosses no integer height in step k.
  for (long long k = 0; k < total; ++k) {
    const long long before = (k * n.q) / total;
    const long long after = ((k + 1) * n.q) / total;
    w.push_back(after == before ? a_letter : Letter{2});
  }
  return CurveClass::from_letters(std::move(w));
}

std::pair<long long, long long> abelianization(const CurveClass& c) {
  long long p = 0;
  long long q = 0;
  for (Letter l : c.rep.letters) {
    switch (l) {
      case 0:
        ++p;
        break;
      case 1:
        --p;
        break;
      case 2:
        ++q;
        break;
      default:
        --q;
        break;
    }
  }
  if (q < 0 || (q == 0 && p < 0)) {
    p = -p;
    q = -q;
  }
  return {p, q};
}

Moebius evaluate_word(const SurfaceStructure& s, const std::vector<Letter>& letters) {
  Moebius m;
  for (Letter l : letters) {
    m = compose(m, s.generator(l));
  }
  return m;
}

Moebius evaluate(const SurfaceStructure& s, const CurveClass& c) {
  return evaluate_word(s, c.rep.letters);
}

bool is_peripheral(const SurfaceStructure& s, const CurveClass& c) {
  return std::abs(evaluate(s, c).trace()) <= 2.0 + 1e-9;
}

double curve_length(const SurfaceStructure& s, const CurveClass& c) {
  return translation_length(evaluate(s, c));
}

}  // namespace gcensus
