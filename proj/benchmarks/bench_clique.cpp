#include <benchmark/benchmark.h>

#include "subcode/clique.hpp"
#include "subcode/singer.hpp"

using namespace subcode;

namespace {

ConflictGraph singer_graph(unsigned v) {
    Field F(2);
    return to_conflict_graph(reduce(build_singer_system(F, v, 3).sys));
}

void BM_build_graph(benchmark::State& state) {
    Field F(2);
    auto red = reduce(build_singer_system(F, unsigned(state.range(0)), 3).sys);
    for (auto _ : state) benchmark::DoNotOptimize(to_conflict_graph(red));
}
BENCHMARK(BM_build_graph)->Arg(8)->Arg(9)->Unit(benchmark::kMicrosecond);

void BM_greedy(benchmark::State& state) {
    auto g = singer_graph(unsigned(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(solve_greedy(g));
}
BENCHMARK(BM_greedy)->Arg(8)->Arg(9)->Unit(benchmark::kMicrosecond);

void BM_local(benchmark::State& state) {
    auto g = singer_graph(unsigned(state.range(0)));
    LocalOpts o;
    o.max_iters = 20000;
    for (auto _ : state) benchmark::DoNotOptimize(solve_local(g, o));
    state.SetItemsProcessed(int64_t(state.iterations()) * 20000);
}
BENCHMARK(BM_local)->Arg(8)->Arg(9)->Unit(benchmark::kMillisecond);

void BM_exact(benchmark::State& state) {
    auto g = singer_graph(unsigned(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(solve_exact(g));
}
BENCHMARK(BM_exact)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
