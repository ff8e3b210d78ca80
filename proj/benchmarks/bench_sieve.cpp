#include <benchmark/benchmark.h>

#include "fano/arith.hpp"
#include "fano/basket.hpp"
#include "fano/rr.hpp"
#include "fano/sieve.hpp"
#include "fano/wps.hpp"

namespace {

using namespace fano;

void BM_EnumerateGorensteinWps(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_gorenstein_wps3());
}
BENCHMARK(BM_EnumerateGorensteinWps);

void BM_PhiIndexSet(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(phi_index_set(20, {60}));
}
BENCHMARK(BM_PhiIndexSet);

void BM_EnumerateBaskets(benchmark::State& state) {
    const std::int64_t J = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_baskets(J, Rat(14)));
}
BENCHMARK(BM_EnumerateBaskets)->Arg(1)->Arg(12)->Arg(40);

void BM_RrAdmissibleQ40(benchmark::State& state) {
    Basket b = parse_basket("5:1,8:1");
    for (auto _ : state) benchmark::DoNotOptimize(rr_admissible(40, Rat(40), b));
}
BENCHMARK(BM_RrAdmissibleQ40);

void BM_ThreefoldBudgetOnly(benchmark::State& state) {
    StageSet stages = StageSet::parse("budget");
    for (auto _ : state)
        benchmark::DoNotOptimize(threefold_sieve(23, 66, stages, 1));
}
BENCHMARK(BM_ThreefoldBudgetOnly);

void BM_ThreefoldFull(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(threefold_sieve(23, 66, StageSet::all(), 1));
}
BENCHMARK(BM_ThreefoldFull);

void BM_SurfaceSieve(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(surface_sieve(3, 9, 1));
}
BENCHMARK(BM_SurfaceSieve);

}  // namespace

BENCHMARK_MAIN();
