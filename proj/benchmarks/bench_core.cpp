#include "achrolab/constructions.hpp"
#include "achrolab/matrix.hpp"
#include "achrolab/search.hpp"
#include "achrolab/stats.hpp"

#include <benchmark/benchmark.h>

using namespace achrolab;

static void BM_build_odd_q(benchmark::State & state) {
    const int q = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(build_odd_q_matrix(q));
}
BENCHMARK(BM_build_odd_q)->Arg(7)->Arg(41)->Arg(199);

static void BM_is_member(benchmark::State & state) {
    const ColourMatrix m = build_odd_q_matrix(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(is_member(m));
}
BENCHMARK(BM_is_member)->Arg(7)->Arg(41)->Arg(199);

static void BM_stats(benchmark::State & state) {
    const ColourMatrix m = build_odd_q_matrix(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        MatrixStats st(m);
        benchmark::DoNotOptimize(st.freq.min_frequency());
    }
}
BENCHMARK(BM_stats)->Arg(7)->Arg(41)->Arg(199);

static void BM_exact_decision(benchmark::State & state) {
    SearchConfig cfg;
    cfg.p = 3;
    cfg.q = 4;
    cfg.k = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(exists_colouring(cfg));
}
BENCHMARK(BM_exact_decision)->Arg(5)->Arg(6)->Arg(7);

static void BM_achromatic_2x3(benchmark::State & state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(achromatic_number(2, 3));
}
BENCHMARK(BM_achromatic_2x3);

static void BM_heuristic_6x7(benchmark::State & state) {
    SearchConfig cfg;
    cfg.p = 6;
    cfg.q = 7;
    cfg.k = 17;
    cfg.node_budget = 200000;
    cfg.seed = 1;
    for (auto _ : state)
        benchmark::DoNotOptimize(heuristic_search(cfg));
}
BENCHMARK(BM_heuristic_6x7);

BENCHMARK_MAIN();
