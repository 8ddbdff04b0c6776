#include <benchmark/benchmark.h>

#include "padicdyn/dynamics.hpp"
#include "padicdyn/roots.hpp"

using namespace padicdyn;

namespace {

MapParams unit_map(const PAdicContext& ctx) {
    return MapParams(PAdicNumber::one(ctx), 2);
}

void BM_Step(benchmark::State& state) {
    PAdicContext ctx(31, static_cast<int>(state.range(0)));
    MapParams params = unit_map(ctx);
    PAdicNumber x = PAdicNumber::from_integer(3, ctx);
    for (auto _ : state) {
        x = step(params, x);
        benchmark::DoNotOptimize(x);
    }
}
BENCHMARK(BM_Step)->Arg(64)->Arg(512);

void BM_SteppedIterate(benchmark::State& state) {
    PAdicContext ctx(31, 64);
    MapParams params = unit_map(ctx);
    PAdicNumber x = PAdicNumber::from_integer(3, ctx);
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        PAdicNumber y = x;
        for (int i = 0; i < n; ++i) y = step(params, y);
        benchmark::DoNotOptimize(y);
    }
}
BENCHMARK(BM_SteppedIterate)->Arg(10)->Arg(100)->Arg(1000);

void BM_ClosedFormIterate(benchmark::State& state) {
    PAdicContext ctx(31, 64);
    MapParams params = unit_map(ctx);
    PAdicNumber x = PAdicNumber::from_integer(3, ctx);
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(iterate_closed_form(params, x, n));
    }
}
BENCHMARK(BM_ClosedFormIterate)->Arg(10)->Arg(100)->Arg(1000)->Arg(10000);

void BM_CubeRoots(benchmark::State& state) {
    PAdicContext ctx(31, static_cast<int>(state.range(0)));
    PAdicNumber a = PAdicNumber::one(ctx);
    for (auto _ : state) {
        benchmark::DoNotOptimize(cube_roots(a));
    }
}
BENCHMARK(BM_CubeRoots)->Arg(64)->Arg(512)->Arg(2048);

void BM_RootsOfUnity(benchmark::State& state) {
    PAdicContext ctx(10007, 64);
    const mpz_class k(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(roots_of_unity(k, ctx));
    }
}
BENCHMARK(BM_RootsOfUnity)->Arg(2)->Arg(5003);

void BM_RadiusIterate(benchmark::State& state) {
    MapParams params(7, 5, 2);
    Radius r = Radius::from_exponent(7, 3, 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(radius_iterate(params, r, static_cast<int>(state.range(0))));
    }
}
BENCHMARK(BM_RadiusIterate)->Arg(60)->Arg(240);

void BM_PeriodicSearch(benchmark::State& state) {
    PAdicContext ctx(31, 64);
    MapParams params = unit_map(ctx);
    for (auto _ : state) {
        benchmark::DoNotOptimize(find_periodic(params, static_cast<int>(state.range(0))));
    }
}
BENCHMARK(BM_PeriodicSearch)->Arg(4)->Arg(8);

} // namespace

BENCHMARK_MAIN();
