#include <benchmark/benchmark.h>

#include "gcensus/census.hpp"
#include "gcensus/phase.hpp"
#include "gcensus/self_intersection.hpp"
#include "gcensus/surface.hpp"
#include "gcensus/words.hpp"

namespace {

using namespace gcensus;

void BM_EnumerateSimple(benchmark::State& state) {
  const SurfaceStructure s = modular_torus();
  const double L = static_cast<double>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_simple(s, L));
  }
}
BENCHMARK(BM_EnumerateSimple)->Arg(15)->Arg(30)->Arg(45)->Unit(benchmark::kMillisecond);

void BM_OrbitBfs(benchmark::State& state) {
  const SurfaceStructure s = modular_torus();
  const CurveClass seed = CurveClass::parse("aab");
  const double L = static_cast<double>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_type(s, seed, L));
  }
}
BENCHMARK(BM_OrbitBfs)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_SelfIntersection(benchmark::State& state) {
  const CurveClass c = CurveClass::parse("aababbaababbaab");
  for (auto _ : state) {
    benchmark::DoNotOptimize(self_intersection(c));
  }
}
BENCHMARK(BM_SelfIntersection)->Unit(benchmark::kMicrosecond);

void BM_ReduceToDomain(benchmark::State& state) {
  const SurfaceStructure s = modular_torus();
  const UpperHalfPoint far_point{23.75, 0.013};
  for (auto _ : state) {
    benchmark::DoNotOptimize(reduce_to_domain(s, far_point));
  }
}
BENCHMARK(BM_ReduceToDomain)->Unit(benchmark::kMicrosecond);

void BM_BuildHistogram(benchmark::State& state) {
  const SurfaceStructure s = modular_torus();
  const Census census = enumerate_simple(s, 10.0);
  const BinningSpec bins = default_binning();
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_histogram(s, census, 0.05, bins));
  }
}
BENCHMARK(BM_BuildHistogram)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
