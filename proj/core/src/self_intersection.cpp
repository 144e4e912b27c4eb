#include "gcensus/self_intersection.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "gcensus/errors.hpp"

namespace gcensus {

namespace {

// Planar ribbon order of the four edge germs around a vertex of the wedge of
// two circles: a, b, a^-1, b^-1 counterclockwise. Letter index -> position.
constexpr int kRibbonPos[4] = {0, 2, 1, 3};

// Linear order of the outgoing directions at a vertex, cutting the circular
// ribbon order at the direction we arrived from (or at a fixed corner for
// the root vertex, where incoming < 0).
int rank(Letter letter, int incoming) {
  if (incoming < 0) {
    return kRibbonPos[letter];
  }
  const int forbidden = kRibbonPos[inverse_letter(static_cast<Letter>(incoming))];
  return (kRibbonPos[letter] - forbidden - 1 + 4) & 3;
}

// Infinite reduced ray read off the cyclic word: forward from position i
// (the suffix w_i w_{i+1} ...) or backward (the inverted prefix
// w_{i-1}^-1 w_{i-2}^-1 ...).
struct Ray {
  const std::vector<Letter>* w;
  std::size_t i;
  bool forward;

  Letter letter(std::size_t k) const {
    const std::size_t n = w->size();
    if (forward) {
      return (*w)[(i + k) % n];
    }
    return inverse_letter((*w)[(i + n - 1 - (k % n)) % n]);
  }
};

bool ray_less(const Ray& r1, const Ray& r2, std::size_t depth) {
  int prev = -1;
  for (std::size_t k = 0; k < depth; ++k) {
    const Letter x = r1.letter(k);
    const Letter y = r2.letter(k);
    if (x != y) {
      return rank(x, prev) < rank(y, prev);
    }
    prev = x;
  }
  throw std::logic_error("boundary rays of distinct strands did not separate");
}

// Shared strand-pair enumeration: counts ordered pairs (s, j) of strands
// whose germs at the base vertex genuinely diverge and whose boundary
// endpoints link; every geometric crossing is seen from both sides, so the
// count is halved (and its parity asserted).
template <typename LinkedFn>
int count_linked_pairs(const std::vector<Letter>& w, LinkedFn&& linked) {
  const std::size_t n = w.size();
  int count = 0;
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t j = 0; j < n; ++j) {
      if (s == j) {
        continue;
      }
      const Letter in_s = w[(s + n - 1) % n];
      const Letter in_j = w[(j + n - 1) % n];
      // Strands entering the vertex along the same germ are parallel here;
      // a strand continuing straight into the other's incoming germ is the
      // same coset seen one step later. Both would double-count.
      if (in_s == in_j) {
        continue;
      }
      if (inverse_letter(in_s) == w[j]) {
        continue;
      }
      if (linked(s, j)) {
        ++count;
      }
    }
  }
  if (count % 2 != 0) {
    throw std::logic_error("linked strand pair count must be even");
  }
  return count / 2;
}

int si_primitive_combinatorial(const std::vector<Letter>& w) {
  const std::size_t n = w.size();
  if (n == 1) {
    return 0;
  }
  // Two boundary rays per strand: index 2i backward, 2i + 1 forward.
  std::vector<Ray> rays;
  rays.reserve(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    rays.push_back(Ray{&w, i, false});
    rays.push_back(Ray{&w, i, true});
  }
  const std::size_t depth = 2 * n + 8;
  std::vector<std::size_t> order(2 * n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t p, std::size_t q) {
    return ray_less(rays[p], rays[q], depth);
  });
  std::vector<std::size_t> pos(2 * n);
  for (std::size_t idx = 0; idx < order.size(); ++idx) {
    pos[order[idx]] = idx;
  }
  return count_linked_pairs(w, [&](std::size_t s, std::size_t j) {
    const auto a1 = pos[2 * s];
    const auto a2 = pos[2 * s + 1];
    const auto b1 = pos[2 * j];
    const auto b2 = pos[2 * j + 1];
    const auto lo = std::min(a1, a2);
    const auto hi = std::max(a1, a2);
    const bool b1_in = lo < b1 && b1 < hi;
    const bool b2_in = lo < b2 && b2 < hi;
    return b1_in != b2_in;
  });
}

// Boundary fixed points as angles on the circle compactification:
// p -> 2*atan(p), infinity -> pi. Returns (repelling, attracting).
std::pair<double, double> fixed_angles(const Moebius& m) {
  const auto [rep, att] = axis(m);
  const auto ang = [](double p) {
    return std::isinf(p) ? std::acos(-1.0) : 2.0 * std::atan(p);
  };
  return {ang(rep), ang(att)};
}

int si_primitive_geometric(const SurfaceStructure& s, const std::vector<Letter>& w) {
  const std::size_t n = w.size();
  if (n == 1) {
    return 0;
  }
  const double two_pi = 2.0 * std::acos(-1.0);
  std::vector<std::pair<double, double>> endpoints;
  endpoints.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Letter> rot(w.begin() + i, w.end());
    rot.insert(rot.end(), w.begin(), w.begin() + i);
    endpoints.push_back(fixed_angles(evaluate_word(s, rot)));
  }
  const auto in_arc = [two_pi](double x, double from, double to) {
    const double span = std::fmod(to - from + two_pi, two_pi);
    const double p = std::fmod(x - from + two_pi, two_pi);
    return 0.0 < p && p < span;
  };
  return count_linked_pairs(w, [&](std::size_t si, std::size_t j) {
    const auto [a1, a2] = endpoints[si];
    const auto [b1, b2] = endpoints[j];
    return in_arc(b1, a1, a2) != in_arc(b2, a1, a2);
  });
}

}  // namespace

int self_intersection(const CurveClass& c) {
  const std::vector<Letter>& w = c.rep.letters;
  const std::size_t period = smallest_period(w);
  if (period < w.size()) {
    const std::size_t k = w.size() / period;
    const CurveClass root = CurveClass::from_letters(
        std::vector<Letter>(w.begin(), w.begin() + period));
    return static_cast<int>(k * k) * self_intersection(root) +
           static_cast<int>(k - 1);
  }
  return si_primitive_combinatorial(w);
}

int self_intersection_geometric(const SurfaceStructure& s, const CurveClass& c) {
  const std::vector<Letter>& w = c.rep.letters;
  const std::size_t period = smallest_period(w);
  if (period < w.size()) {
    const std::size_t k = w.size() / period;
    const CurveClass root = CurveClass::from_letters(
        std::vector<Letter>(w.begin(), w.begin() + period));
    return static_cast<int>(k * k) * self_intersection_geometric(s, root) +
           static_cast<int>(k - 1);
  }
  return si_primitive_geometric(s, w);
}

}  // namespace gcensus
