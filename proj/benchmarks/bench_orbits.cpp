#include <benchmark/benchmark.h>

#include "subcode/kramer_mesner.hpp"
#include "subcode/singer.hpp"

using namespace subcode;

namespace {

void BM_singer_system(benchmark::State& state) {
    Field F(2);
    unsigned v = unsigned(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(build_singer_system(F, v, 3));
}
BENCHMARK(BM_singer_system)->Arg(7)->Arg(9)->Arg(11)->Unit(benchmark::kMillisecond);

void BM_full_system(benchmark::State& state) {
    Field F(2);
    unsigned v = unsigned(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(build_full_system(F, v, 3, 2));
}
BENCHMARK(BM_full_system)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_condense_singer(benchmark::State& state) {
    Field F(2);
    unsigned v = unsigned(state.range(0));
    auto g = singer_group(F, v);
    for (auto _ : state) benchmark::DoNotOptimize(condense(F, g, 3, 2));
}
BENCHMARK(BM_condense_singer)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_reduce(benchmark::State& state) {
    Field F(2);
    auto ss = build_singer_system(F, unsigned(state.range(0)), 3);
    for (auto _ : state) benchmark::DoNotOptimize(reduce(ss.sys));
}
BENCHMARK(BM_reduce)->Arg(9)->Arg(11);

}  // namespace

BENCHMARK_MAIN();
