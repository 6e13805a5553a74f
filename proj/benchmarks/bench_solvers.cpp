#include <benchmark/benchmark.h>

#include "mfg/coupling.hpp"
#include "mfg/fp.hpp"
#include "mfg/hjb.hpp"

using namespace mfg;

static void BM_HjbSweep(benchmark::State& state) {
    const ModelParams params;
    const Grid grid = build_grid(params.L, params.T, state.range(0), state.range(0) * 2);
    const ScalarPath f(grid.nt + 1, 1.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve_hjb(f, params, grid));
    }
}
BENCHMARK(BM_HjbSweep)->Arg(100)->Arg(200)->Arg(400);

static void BM_FpSweep(benchmark::State& state) {
    const ModelParams params;
    const Grid grid = build_grid(params.L, params.T, state.range(0), state.range(0) * 2);
    const ScalarPath f(grid.nt + 1, 1.0);
    const Field u = solve_hjb(f, params, grid);
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve_fp(u, f, params, grid));
    }
}
BENCHMARK(BM_FpSweep)->Arg(100)->Arg(200)->Arg(400);

static void BM_PicardSolve(benchmark::State& state) {
    const ModelParams params;
    Discretization disc;
    disc.nx = state.range(0);
    disc.nt = state.range(0) * 2;
    const ScalarPath q0(disc.nt + 1, 0.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(picard_solve(params, disc, q0, 1.0));
    }
}
BENCHMARK(BM_PicardSolve)->Arg(50)->Arg(100)->Arg(200);

BENCHMARK_MAIN();
