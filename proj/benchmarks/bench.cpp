#include "npcert/families.hpp"

#include <benchmark/benchmark.h>

using namespace npcert;

namespace {

SurfaceContext model() { return double_cover_model(4, 5); }

void bm_cohomology_cover(benchmark::State& state) {
  const SurfaceContext ctx = model();
  const Int l = state.range(0);
  for (auto _ : state) {
    const CohomDims dims = cohomology_cover(l * ctx.B());
    benchmark::DoNotOptimize(dims.h0);
  }
}
BENCHMARK(bm_cohomology_cover)->Arg(4)->Arg(64)->Arg(1024);

void bm_enumerate_ex5_3(benchmark::State& state) {
  const Int b_max = state.range(0);
  for (auto _ : state) {
    const EnumerationResult res = enumerate_ex5_3(2, b_max);
    benchmark::DoNotOptimize(res.solutions.size());
  }
}
BENCHMARK(bm_enumerate_ex5_3)->Arg(10)->Arg(30);

void bm_certify(benchmark::State& state) {
  const SurfaceContext ctx = model();
  const Int p = state.range(0);
  for (auto _ : state) {
    // fresh context each round so the h1 cache does not amortize away
    const SurfaceContext fresh = model();
    const auto cert = min_r_for_Np(fresh, p);
    benchmark::DoNotOptimize(cert.has_value());
  }
  (void)ctx;
}
BENCHMARK(bm_certify)->Arg(0)->Arg(2)->Arg(5);

}  // namespace

BENCHMARK_MAIN();
