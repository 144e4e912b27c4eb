#include <cmath>
#include <numeric>
#include <set>

#include <doctest.h>

#include "gcensus/errors.hpp"
#include "gcensus/surface.hpp"
#include "gcensus/words.hpp"

using namespace gcensus;

TEST_SUITE("words") {

TEST_CASE("letter codes round trip") {
  for (char c : {'a', 'A', 'b', 'B'}) {
    CHECK(letter_to_char(letter_from_char(c)) == c);
  }
  CHECK(inverse_letter(letter_from_char('a')) == letter_from_char('A'));
  CHECK(inverse_letter(letter_from_char('B')) == letter_from_char('b'));
}

TEST_CASE("canonicalize reduces and rotates to the minimum") {
  CHECK(canonicalize({letter_from_char('b'), letter_from_char('a')}).str() ==
        "ab");
  CHECK(canonicalize({letter_from_char('b'), letter_from_char('a'),
                      letter_from_char('b')})
            .str() == "abb");
  // cyclic cancellation: A.b.a ~ b
  CHECK(canonicalize({letter_from_char('A'), letter_from_char('b'),
                      letter_from_char('a')})
            .str() == "b");
  CHECK_THROWS_AS(canonicalize({letter_from_char('a'), letter_from_char('A')}),
                  TrivialWord);
  CHECK_THROWS_AS(
      canonicalize({letter_from_char('a'), letter_from_char('b'),
                    letter_from_char('B'), letter_from_char('A')}),
      TrivialWord);
}

TEST_CASE("canonicalize is idempotent on random reduced words") {
  unsigned state = 7u;
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<Letter> letters;
    const int n = 1 + int(state % 12u);
    for (int i = 0; i < n; ++i) {
      state = state * 1664525u + 1013904223u;
      Letter l = Letter(state >> 13 & 3);
      if (!letters.empty() && inverse_letter(letters.back()) == l) {
        l = Letter(l ^ 2);  // sidestep immediate cancellation
      }
      letters.push_back(l);
    }
    try {
      const CyclicWord once = canonicalize(letters);
      const CyclicWord twice = canonicalize(once.letters);
      CHECK(once == twice);
    } catch (const TrivialWord&) {
      // words that cancel away entirely are fine for this property
    }
  }
}

TEST_CASE("inverse word and unoriented classes") {
  const CyclicWord aab = canonicalize(
      {letter_from_char('a'), letter_from_char('a'), letter_from_char('b')});
  CHECK(word_inverse(aab).str() == "AAB");
  CHECK(CurveClass::parse("AAB").str() == "aab");
  CHECK(CurveClass::parse("ab^-1").str() == "aB");
  CHECK(CurveClass::parse("a a b").str() == "aab");
  CHECK(CurveClass::parse("Ba").str() == "aB");
  CHECK_THROWS_AS(CurveClass::parse("aA"), TrivialWord);
}

TEST_CASE("periods and primitivity") {
  CHECK(smallest_period({0, 2, 0, 2}) == 2);
  CHECK(!is_primitive(canonicalize({0, 2, 0, 2})));
  CHECK(is_primitive(canonicalize({0, 0, 2})));
  CHECK(is_primitive(canonicalize({0})));
}

TEST_CASE("slope normalization") {
  CHECK(normalize_slope(2, -4) == Slope{-1, 2});
  CHECK(normalize_slope(-3, 0) == Slope{1, 0});
  CHECK(normalize_slope(0, -5) == Slope{0, 1});
  CHECK(normalize_slope(6, 9) == Slope{2, 3});
}

TEST_CASE("embedded words from slopes, frozen cases") {
  CHECK(simple_from_slope({1, 0}).str() == "a");
  CHECK(simple_from_slope({0, 1}).str() == "b");
  CHECK(simple_from_slope({1, 1}).str() == "ab");
  CHECK(simple_from_slope({2, 1}).str() == "aab");
  CHECK(simple_from_slope({1, 2}).str() == "abb");
  CHECK(simple_from_slope({3, 2}).str() == "aabab");
  CHECK(simple_from_slope({-1, 1}).str() == "aB");
}

TEST_CASE("slope -> word -> homology direction round trips") {
  for (long long p = -30; p <= 30; ++p) {
    for (long long q = 0; q <= 30; ++q) {
      if (q == 0 && p <= 0) continue;
      if (std::gcd(std::llabs(p), q) != 1) continue;
      const Slope slope = normalize_slope(p, q);
      const CurveClass c = simple_from_slope(slope);
      CHECK(c.size() == std::size_t(std::llabs(p) + q));
      CHECK(is_primitive(c.rep));
      const auto [hp, hq] = abelianization(c);
      CHECK(hp == slope.p);
      CHECK(hq == slope.q);
    }
  }
}

TEST_CASE("abelianization uses the slope half-space convention") {
  CHECK(abelianization(CurveClass::parse("aab")) == std::pair{2ll, 1ll});
  CHECK(abelianization(CurveClass::parse("aB")) == std::pair{-1ll, 1ll});
  CHECK(abelianization(CurveClass::parse("abAB")) == std::pair{0ll, 0ll});
}

TEST_CASE("matrix evaluation matches the trace coordinates") {
  const SurfaceStructure s = modular_torus();
  CHECK(std::abs(evaluate(s, CurveClass::parse("a")).trace()) ==
        doctest::Approx(3.0));
  CHECK(std::abs(evaluate(s, CurveClass::parse("b")).trace()) ==
        doctest::Approx(3.0));
  CHECK(std::abs(evaluate(s, CurveClass::parse("ab")).trace()) ==
        doctest::Approx(6.0));
  CHECK(std::abs(evaluate(s, CurveClass::parse("aB")).trace()) ==
        doctest::Approx(3.0));
  CHECK(std::abs(evaluate(s, CurveClass::parse("aab")).trace()) ==
        doctest::Approx(15.0));
}

TEST_CASE("lengths, frozen oracles") {
  const SurfaceStructure s = modular_torus();
  CHECK(curve_length(s, CurveClass::parse("a")) ==
        doctest::Approx(1.9248473002384139).epsilon(1e-14));
  CHECK(curve_length(s, CurveClass::parse("ab")) ==
        doctest::Approx(3.5254943480781722).epsilon(1e-14));
  CHECK(curve_length(s, CurveClass::parse("ab")) ==
        doctest::Approx(2.0 * std::acosh(3.0)).epsilon(1e-14));
}

TEST_CASE("peripheral detection") {
  const SurfaceStructure s = modular_torus();
  CHECK(is_peripheral(s, CurveClass::parse("abAB")));
  CHECK(!is_peripheral(s, CurveClass::parse("a")));
  CHECK_THROWS_AS(curve_length(s, CurveClass::parse("abAB")), NotHyperbolic);
}

}  // TEST_SUITE
