#include <benchmark/benchmark.h>

#include "cutcx/homology.hpp"
#include "cutcx/shelling.hpp"
#include "cutcx/wn_shelling.hpp"

using namespace cutcx;

static void BM_CutComplex(benchmark::State& state)
{
    const Graph g = squared_cycle(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(cut_complex(g, 3));
}
BENCHMARK(BM_CutComplex)->DenseRange(9, 21, 4);

static void BM_ShellingOrder(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(wn::shelling_order(n));
}
BENCHMARK(BM_ShellingOrder)->DenseRange(9, 21, 4);

static void BM_VerifyShelling(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    const auto c = cut_complex(squared_cycle(n), 3);
    const auto order = wn::shelling_order(n);
    for (auto _ : state)
        benchmark::DoNotOptimize(verify_shelling(c, order));
    state.counters["facets"] = static_cast<double>(order.size());
}
BENCHMARK(BM_VerifyShelling)->DenseRange(9, 21, 4);

static void BM_Betti(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    const Field field = state.range(1) ? Field::rationals() : Field::prime(2);
    const auto c = cut_complex(squared_cycle(n), 3);
    for (auto _ : state)
        benchmark::DoNotOptimize(betti(c, field));
    state.SetLabel(field.name());
}
BENCHMARK(BM_Betti)->ArgsProduct({{9, 11, 13}, {0, 1}})->Unit(benchmark::kMillisecond);

static void BM_FindShelling(benchmark::State& state)
{
    const auto c = cut_complex(cycle_graph(static_cast<int>(state.range(0))), 2);
    for (auto _ : state)
        benchmark::DoNotOptimize(find_shelling(c));
}
BENCHMARK(BM_FindShelling)->DenseRange(4, 7, 1);

BENCHMARK_MAIN();
