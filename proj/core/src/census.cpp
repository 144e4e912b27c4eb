#include "gcensus/census.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string_view>
#include <unordered_map>
#include <unordered_set>

#include "gcensus/errors.hpp"
#include "gcensus/parallel.hpp"
#include "gcensus/self_intersection.hpp"
#include "gcensus/version.hpp"

namespace gcensus {

namespace {

constexpr double kLengthGuard = 1e-9;

bool entry_less(const CensusEntry& lhs, const CensusEntry& rhs) {
  if (lhs.length != rhs.length) {
    return lhs.length < rhs.length;
  }
  return lhs.cls < rhs.cls;
}

double format_guarded_length(const Moebius& m) {
  const double t = std::abs(m.trace());
  if (t <= 2.0 + 1e-12) {
    throw NotHyperbolic("census candidate is not hyperbolic");
  }
  return 2.0 * std::acosh(t / 2.0);
}

}  // namespace

const char* census_mode_name(CensusMode mode) {
  switch (mode) {
    case CensusMode::kSimpleExact:
      return "simple-exact";
    case CensusMode::kOrbitBfs:
      return "orbit-bfs";
    case CensusMode::kAllPrimitive:
      return "all-primitive";
  }
  return "unknown";
}

CensusMode census_mode_from_name(const std::string& name) {
  if (name == "simple-exact") return CensusMode::kSimpleExact;
  if (name == "orbit-bfs") return CensusMode::kOrbitBfs;
  if (name == "all-primitive") return CensusMode::kAllPrimitive;
  throw ConfigError("unknown census mode: " + name);
}

std::size_t Census::count_up_to(double length) const {
  const double bound = length + kLengthGuard;
  std::size_t count = 0;
  for (const CensusEntry& e : entries) {
    if (e.length <= bound) {
      ++count;
    } else {
      break;  // entries are sorted by length
    }
  }
  return count;
}

double Census::total_length_up_to(double length) const {
  const double bound = length + kLengthGuard;
  double total = 0.0;
  for (const CensusEntry& e : entries) {
    if (e.length <= bound) {
      total += e.length;
    } else {
      break;
    }
  }
  return total;
}

std::vector<Letter> MCGMove::apply(const std::vector<Letter>& word) const {
  const auto inverted = [](const std::vector<Letter>& w) {
    std::vector<Letter> out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      out.push_back(inverse_letter(*it));
    }
    return out;
  };
  const std::vector<Letter> inv_a = inverted(image_a);
  const std::vector<Letter> inv_b = inverted(image_b);
  std::vector<Letter> out;
  out.reserve(word.size() * 2);
  for (Letter l : word) {
    const std::vector<Letter>* image = nullptr;
    switch (l) {
      case 0:
        image = &image_a;
        break;
      case 1:
        image = &inv_a;
        break;
      case 2:
        image = &image_b;
        break;
      default:
        image = &inv_b;
        break;
    }
    out.insert(out.end(), image->begin(), image->end());
  }
  return out;
}

const std::vector<MCGMove>& standard_moves() {
  static const std::vector<MCGMove> moves = [] {
    const auto W = [](std::string_view text) {
      std::vector<Letter> out;
      for (char c : text) {
        out.push_back(letter_from_char(c));
      }
      return out;
    };
    std::vector<MCGMove> m = {
        {"a->ab", W("ab"), W("b")},   {"a->aB", W("aB"), W("b")},
        {"b->ba", W("a"), W("ba")},   {"b->bA", W("a"), W("bA")},
        {"swap", W("b"), W("a")},     {"invert-a", W("A"), W("b")},
        {"invert-b", W("a"), W("B")},
    };
    // Every move must fix the puncture: the commutator's image stays in the
    // commutator's unoriented conjugacy class.
    const CurveClass commutator = CurveClass::parse("abAB");
    for (const MCGMove& move : m) {
      const CurveClass image =
          CurveClass::from_letters(move.apply(commutator.rep.letters));
      if (!(image == commutator)) {
        throw std::logic_error("move does not preserve the peripheral class: " +
                               move.name);
      }
    }
    return m;
  }();
  return moves;
}

CurveClass apply_moves(const CurveClass& seed, const std::vector<int>& trail) {
  const std::vector<MCGMove>& moves = standard_moves();
  std::vector<Letter> word = seed.rep.letters;
  for (int idx : trail) {
    word = moves.at(static_cast<std::size_t>(idx)).apply(word);
  }
  return CurveClass::from_letters(std::move(word));
}

// ---------------------------------------------------------------------------
// Simple classes: Farey descent on slopes.
// ---------------------------------------------------------------------------

namespace {

struct FareyNode {
  Slope u, v;          // endpoints of the Farey interval
  double tu, tv, to;   // traces of u, v, and the "difference" slope
  bool established;    // monotone trace growth certified at this node
};

struct SlopeCandidate {
  Slope slope;
  double recursion_trace;
};

}  // namespace

Census enumerate_simple(const SurfaceStructure& s, double L) {
  if (!(L > 0.0)) {
    throw CutoffTooSmall("cutoff must be positive");
  }
  const double cutoff_trace = 2.0 * std::cosh(L / 2.0);
  const double prune_trace = cutoff_trace * (1.0 + 1e-4);

  std::vector<SlopeCandidate> candidates;
  candidates.push_back({Slope{1, 0}, s.x});
  candidates.push_back({Slope{0, 1}, s.y});

  std::vector<FareyNode> stack;
  // Right tree: interior slopes p >= 1, q >= 1; mediant of the roots is
  // (1,1) with trace z. Left tree: p <= -1, q >= 1; mediant (-1,1) has the
  // complementary trace x*y - z. Together with the two roots this covers
  // every slope exactly once.
  stack.push_back({Slope{1, 0}, Slope{0, 1}, s.x, s.y, s.x * s.y - s.z, false});
  stack.push_back({Slope{-1, 0}, Slope{0, 1}, s.x, s.y, s.z, false});

  std::size_t nodes = 0;
  while (!stack.empty()) {
    const FareyNode node = stack.back();
    stack.pop_back();
    if (++nodes > 50'000'000) {
      throw BudgetExceeded("Farey descent exceeded its node safety budget");
    }
    const double tm = node.tu * node.tv - node.to;
    const double mx = std::max(node.tu, node.tv);
    if (node.established && tm < mx * (1.0 - 1e-12) - 1e-9) {
      throw std::logic_error("monotone trace growth violated in Farey descent");
    }
    const bool established = node.established || tm >= mx;
    if (established && tm > prune_trace) {
      continue;
    }
    const Slope mediant{node.u.p + node.v.p, node.u.q + node.v.q};
    if (tm <= prune_trace) {
      candidates.push_back({mediant, tm});
    }
    stack.push_back({node.u, mediant, node.tu, tm, node.tv, established});
    stack.push_back({mediant, node.v, tm, node.tv, node.tu, established});
  }

  Census census;
  census.surface_label = s.label;
  census.seed = CurveClass::parse("a");
  census.cutoff = L;
  census.mode = CensusMode::kSimpleExact;
  census.margin = 0.0;
  for (const SlopeCandidate& cand : candidates) {
    const CurveClass cls = simple_from_slope(cand.slope);
    const Moebius m = evaluate(s, cls);
    const double t = std::abs(m.trace());
    if (std::abs(t - std::abs(cand.recursion_trace)) >
        1e-6 * std::max(1.0, t)) {
      char msg[160];
      std::snprintf(msg, sizeof(msg),
                    "trace recursion disagrees with the matrix product: "
                    "slope (%lld,%lld) matrix %.17g recursion %.17g",
                    cand.slope.p, cand.slope.q, t, cand.recursion_trace);
      throw std::logic_error(msg);
    }
    const double length = format_guarded_length(m);
    if (length <= L + kLengthGuard) {
      census.entries.push_back({cls, length, 0});
    }
  }
  std::sort(census.entries.begin(), census.entries.end(), entry_less);
  if (census.entries.empty()) {
    throw CutoffTooSmall("no embedded curve below the cutoff");
  }
  return census;
}

// ---------------------------------------------------------------------------
// Orbit BFS.
// ---------------------------------------------------------------------------

Census enumerate_type(const SurfaceStructure& s, const CurveClass& seed,
                      double L, const OrbitOptions& options) {
  if (is_peripheral(s, seed)) {
    throw SeedPeripheral("seed class is cusp-parallel: " + seed.str());
  }
  const double seed_length = curve_length(s, seed);
  if (seed_length > L + kLengthGuard) {
    throw CutoffTooSmall("seed is already longer than the cutoff");
  }
  const double cap = L * (1.0 + options.margin);
  const std::vector<MCGMove>& moves = standard_moves();

  struct VisitInfo {
    double length = 0.0;
    std::vector<int> trail;
  };
  std::unordered_map<std::string, VisitInfo> visited;
  std::vector<std::pair<CurveClass, const VisitInfo*>> discovered;

  std::vector<CurveClass> frontier{seed};
  visited.emplace(seed.str(), VisitInfo{seed_length, {}});
  discovered.emplace_back(seed, &visited.at(seed.str()));

  struct ChildRecord {
    CurveClass cls;
    double length = 0.0;
    int move = 0;
  };

  while (!frontier.empty()) {
    const auto expand = [&](const CurveClass& parent) {
      std::vector<ChildRecord> children;
      children.reserve(moves.size());
      for (std::size_t k = 0; k < moves.size(); ++k) {
        CurveClass child =
            CurveClass::from_letters(moves[k].apply(parent.rep.letters));
        const double t = std::abs(evaluate(s, child).trace());
        if (t <= 2.0 + 1e-12) {
          throw std::logic_error("orbit move produced a parabolic class");
        }
        children.push_back(
            {std::move(child), 2.0 * std::acosh(t / 2.0), static_cast<int>(k)});
      }
      return children;
    };
    const std::vector<std::vector<ChildRecord>> layer =
        parallel_map(frontier, expand, options.workers);

    std::vector<CurveClass> next;
    for (std::size_t pi = 0; pi < frontier.size(); ++pi) {
      const std::vector<int>& parent_trail =
          visited.at(frontier[pi].str()).trail;
      for (const ChildRecord& child : layer[pi]) {
        auto [it, inserted] = visited.try_emplace(child.cls.str());
        if (!inserted) {
          continue;
        }
        it->second.length = child.length;
        it->second.trail = parent_trail;
        it->second.trail.push_back(child.move);
        discovered.emplace_back(child.cls, &it->second);
        if (visited.size() > options.visited_cap) {
          throw BudgetExceeded("orbit BFS visited-set cap exceeded");
        }
        if (child.length <= cap + kLengthGuard) {
          next.push_back(child.cls);
        }
      }
    }
    frontier = std::move(next);
  }

  const int seed_si = self_intersection(seed);
  Census census;
  census.surface_label = s.label;
  census.seed = seed;
  census.cutoff = L;
  census.mode = CensusMode::kOrbitBfs;
  census.margin = options.margin;

  struct Row {
    CensusEntry entry;
    const std::vector<int>* trail;
  };
  std::vector<Row> rows;
  for (const auto& [cls, info] : discovered) {
    if (info->length > L + kLengthGuard) {
      continue;
    }
    const int si = self_intersection(cls);
    if (si != seed_si) {
      throw std::logic_error("orbit entry " + cls.str() +
                             " changed self-intersection");
    }
    rows.push_back({{cls, info->length, si}, &info->trail});
  }
  std::sort(rows.begin(), rows.end(), [](const Row& lhs, const Row& rhs) {
    return entry_less(lhs.entry, rhs.entry);
  });
  for (Row& row : rows) {
    census.entries.push_back(std::move(row.entry));
    census.trails.push_back(*row.trail);
  }
  return census;
}

// ---------------------------------------------------------------------------
// All primitive classes.
// ---------------------------------------------------------------------------

namespace {

// Empirical length-per-letter constant: the smallest geodesic length per
// cyclic word letter over all hyperbolic classes up to the calibration
// word length.
double calibrate_length_rate(const SurfaceStructure& s, std::size_t max_len) {
  double rate = std::numeric_limits<double>::infinity();
  std::vector<Letter> word;
  std::vector<Moebius> mats{Moebius::identity()};

  // Depth-first over reduced words; at each depth record the smallest
  // hyperbolic |trace| among cyclically reduced primitive words. The
  // primitivity filter matches the enumeration's assertion domain and is
  // load-bearing: proper powers of the peripheral commutator are parabolic
  // (true |trace| = 2), and at word length 8+ their computed traces can
  // jitter just past the hyperbolicity gate, which would poison the rate
  // with spurious near-zero lengths.
  std::vector<double> best(max_len + 1,
                           std::numeric_limits<double>::infinity());
  const std::function<void()> descend = [&] {
    const std::size_t n = word.size();
    if (n > 0 && word.front() != inverse_letter(word.back()) &&
        smallest_period(word) == n) {
      const double t = std::abs(mats.back().trace());
      if (t > 2.0 + 1e-12) {
        best[n] = std::min(best[n], t);
      }
    }
    if (n == max_len) {
      return;
    }
    for (Letter l = 0; l < 4; ++l) {
      if (n > 0 && l == inverse_letter(word.back())) {
        continue;
      }
      word.push_back(l);
      mats.push_back(compose(mats[n], s.generator(l)));
      descend();
      word.pop_back();
      mats.pop_back();
    }
  };
  descend();
  for (std::size_t n = 1; n <= max_len; ++n) {
    if (std::isfinite(best[n])) {
      rate = std::min(rate, 2.0 * std::acosh(best[n] / 2.0) / double(n));
    }
  }
  if (!std::isfinite(rate) || rate <= 0.0) {
    throw CalibrationFailure("no usable length-per-letter rate");
  }
  return rate;
}

}  // namespace

Census enumerate_all_primitive(const SurfaceStructure& s, double L,
                               const PrimitiveOptions& options) {
  if (!(L > 0.0)) {
    throw CutoffTooSmall("cutoff must be positive");
  }
  const double rate = calibrate_length_rate(s, options.calibration_wordlength);
  const std::size_t n_max =
      static_cast<std::size_t>(std::ceil(L / rate)) + 1;
  const double reach = L + 8.0;
  const UpperHalfPoint base = base_point();

  std::unordered_set<std::string> seen;
  std::vector<CensusEntry> found;
  std::size_t nodes = 0;

  std::vector<Letter> word;
  std::vector<Moebius> mats{Moebius::identity()};
  const std::function<void()> descend = [&] {
    const std::size_t n = word.size();
    if (n > 0) {
      if (++nodes > options.node_budget) {
        throw BudgetExceeded(
            "primitive enumeration exceeded its node budget at cutoff " +
            std::to_string(L));
      }
      if (word.front() != inverse_letter(word.back())) {
        const double t = std::abs(mats.back().trace());
        if (t > 2.0 + 1e-12) {
          const double length = 2.0 * std::acosh(t / 2.0);
          if (length <= L + kLengthGuard) {
            const CurveClass cls = CurveClass::from_letters(word);
            if (is_primitive(cls.rep) && seen.insert(cls.str()).second) {
              if (length + kLengthGuard < rate * double(n)) {
                throw CalibrationFailure(
                    "class " + cls.str() +
                    " violates the calibrated length bound");
              }
              found.push_back({cls, length, 0});
            }
          }
        }
      }
      if (n >= n_max ||
          hyperbolic_distance(mats.back().apply(base), base) > reach) {
        return;
      }
    }
    for (Letter l = 0; l < 4; ++l) {
      if (n > 0 && l == inverse_letter(word.back())) {
        continue;
      }
      word.push_back(l);
      mats.push_back(compose(mats[n], s.generator(l)));
      descend();
      word.pop_back();
      mats.pop_back();
    }
  };
  descend();

  Census census;
  census.surface_label = s.label;
  census.seed = CurveClass::parse("a");
  census.cutoff = L;
  census.mode = CensusMode::kAllPrimitive;
  census.margin = 0.0;
  for (CensusEntry& entry : found) {
    entry.self_intersection = self_intersection(entry.cls);
    census.entries.push_back(std::move(entry));
  }
  std::sort(census.entries.begin(), census.entries.end(), entry_less);
  if (census.entries.empty()) {
    throw CutoffTooSmall("no primitive class below the cutoff");
  }
  return census;
}

std::string census_to_csv(const Census& census, const std::string& config_hash) {
  std::string out;
  char line[96];
  out += std::string("# geodesic-census v") + kVersion + "\n";
  out += "# config " + config_hash + "\n";
  out += "# surface " + census.surface_label + "\n";
  out += "# seed " + census.seed.str() + "\n";
  std::snprintf(line, sizeof(line), "# L %.17g\n", census.cutoff);
  out += line;
  out += std::string("# mode ") + census_mode_name(census.mode) + "\n";
  std::snprintf(line, sizeof(line), "# margin %.17g\n", census.margin);
  out += line;
  out += "word,length,self_intersection\n";
  for (const CensusEntry& e : census.entries) {
    out += e.cls.str();
    std::snprintf(line, sizeof(line), ",%.17g,%d\n", e.length,
                  e.self_intersection);
    out += line;
  }
  return out;
}

}  // namespace gcensus
