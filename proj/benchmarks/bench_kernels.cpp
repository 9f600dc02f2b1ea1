#include <benchmark/benchmark.h>

#include "gdlab/approx.hpp"
#include "gdlab/expsum.hpp"
#include "gdlab/gaussint.hpp"
#include "gdlab/hurwitz.hpp"
#include "gdlab/sectorcount.hpp"

using namespace gdlab;

namespace {

void BM_SieveRegion(benchmark::State& state) {
  const Region reg = Region::disk(static_cast<double>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(sieve_region(reg));
}
BENCHMARK(BM_SieveRegion)->Arg(250)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_PiStarCount(benchmark::State& state) {
  const Region reg = Region::disk(static_cast<double>(state.range(0)));
  const ComplexHP c = parse_complex("sqrt2+sqrt3*i", 256);
  for (auto _ : state) benchmark::DoNotOptimize(pi_star_count(reg, 0.1, c));
}
BENCHMARK(BM_PiStarCount)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);

void BM_LinearSum(benchmark::State& state) {
  const ExpSumQuery q{ComplexHP(0.3183, 0.5772, 256), 0.0, static_cast<double>(state.range(0)), std::nullopt};
  for (auto _ : state) benchmark::DoNotOptimize(linear_sum(q));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(annulus_lattice_count(0.0, q.x_hi)));
}
BENCHMARK(BM_LinearSum)->Arg(100)->Arg(400)->Unit(benchmark::kMicrosecond);

void BM_CountSP(benchmark::State& state) {
  SieveParams sp;
  sp.alpha = ComplexHP(0.6180, 0.7071, 256);
  sp.c = parse_complex("sqrt2+sqrt3*i", 256);
  sp.P = static_cast<double>(state.range(0));
  sp.desk_scale = true;
  for (auto _ : state) benchmark::DoNotOptimize(count_SP(sp));
}
BENCHMARK(BM_CountSP)->Arg(200)->Arg(800)->Unit(benchmark::kMillisecond);

void BM_CountFN(benchmark::State& state) {
  const ComplexHP alpha(0.6180, 0.7071, 256);
  const ComplexHP c = parse_complex("sqrt2+sqrt3*i", 256);
  for (auto _ : state) benchmark::DoNotOptimize(count_FN(alpha, c, 0.05, static_cast<double>(state.range(0))));
}
BENCHMARK(BM_CountFN)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_HurwitzExpand(benchmark::State& state) {
  const ComplexHP c = parse_complex("e+pi*i", 1024);
  for (auto _ : state) benchmark::DoNotOptimize(expand(c, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_HurwitzExpand)->Arg(20)->Arg(100)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
