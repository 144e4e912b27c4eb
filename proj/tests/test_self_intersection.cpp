#include <functional>
#include <set>
#include <vector>

#include <doctest.h>

#include "gcensus/self_intersection.hpp"
#include "gcensus/surface.hpp"
#include "gcensus/words.hpp"

using namespace gcensus;

namespace {

// Every cyclically reduced class of word length <= maxlen, powers included.
std::vector<CurveClass> classes_up_to(int maxlen) {
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

CurveClass power(const CurveClass& u, int k) {
  std::vector<Letter> letters;
  for (int i = 0; i < k; ++i) {
    letters.insert(letters.end(), u.rep.letters.begin(), u.rep.letters.end());
  }
  return CurveClass::from_letters(letters);
}

}  // namespace

TEST_SUITE("self_intersection") {

TEST_CASE("frozen values, embedded classes") {
  CHECK(self_intersection(CurveClass::parse("a")) == 0);
  CHECK(self_intersection(CurveClass::parse("b")) == 0);
  CHECK(self_intersection(CurveClass::parse("ab")) == 0);
  CHECK(self_intersection(CurveClass::parse("aB")) == 0);
  CHECK(self_intersection(CurveClass::parse("aab")) == 0);
  CHECK(self_intersection(CurveClass::parse("abb")) == 0);
  CHECK(self_intersection(CurveClass::parse("aabab")) == 0);
}

TEST_CASE("frozen values, non-embedded and cusp classes") {
  CHECK(self_intersection(CurveClass::parse("abAB")) == 0);
  CHECK(self_intersection(CurveClass::parse("abaB")) == 1);
  CHECK(self_intersection(CurveClass::parse("aa")) == 1);
  CHECK(self_intersection(CurveClass::parse("abab")) == 1);
  CHECK(self_intersection(CurveClass::parse("ababab")) == 2);
  CHECK(self_intersection(CurveClass::parse("abABabAB")) == 1);
  CHECK(self_intersection(CurveClass::parse("aabaab")) == 1);
}

TEST_CASE("power rule") {
  for (const char* seed : {"a", "ab", "aab", "abaB"}) {
    const CurveClass u = CurveClass::parse(seed);
    const int base = self_intersection(u);
    for (int k = 2; k <= 3; ++k) {
      CHECK(self_intersection(power(u, k)) == k * k * base + (k - 1));
    }
  }
}

TEST_CASE("agrees with the axis-crossing count on two structures") {
  const SurfaceStructure s1 = modular_torus();
  const SurfaceStructure s2 = build_surface(3.0, 4.0);
  int compared = 0;
  for (const CurveClass& c : classes_up_to(6)) {
    if (is_peripheral(s1, c)) continue;
    const int combinatorial = self_intersection(c);
    CHECK(self_intersection_geometric(s1, c) == combinatorial);
    CHECK(self_intersection_geometric(s2, c) == combinatorial);
    ++compared;
  }
  CHECK(compared > 100);  // the enumeration is not vacuous
}

TEST_CASE("unoriented classes: inverse has the same count") {
  for (const char* word : {"aab", "abaB", "aabb", "aabAB"}) {
    const CurveClass c = CurveClass::parse(word);
    const CurveClass inv = CurveClass::from_word(word_inverse(c.rep));
    CHECK(c == inv);  // classes are unoriented by construction
    CHECK(self_intersection(c) == self_intersection(inv));
  }
}

}  // TEST_SUITE
