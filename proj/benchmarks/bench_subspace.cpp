#include <benchmark/benchmark.h>

#include <random>

#include "subcode/subspace.hpp"

using namespace subcode;

namespace {

SubspaceKey random_subspace(const Field& F, unsigned v, unsigned k, std::mt19937_64& rng) {
    for (;;) {
        std::vector<uint8_t> rows(size_t(k) * v);
        for (auto& x : rows) x = uint8_t(rng() % F.q());
        SubspaceKey s(F, v, rows);
        if (s.k() == k) return s;
    }
}

void BM_gaussian_binomial(benchmark::State& state) {
    unsigned v = unsigned(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(gaussian_binomial(v, v / 2, 2));
}
BENCHMARK(BM_gaussian_binomial)->Arg(16)->Arg(64)->Arg(256);

void BM_enumerate(benchmark::State& state) {
    Field F(2);
    unsigned v = unsigned(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_subspaces(F, v, 3));
    state.SetItemsProcessed(int64_t(state.iterations()) *
                            int64_t(gaussian_binomial(v, 3, 2)));
}
BENCHMARK(BM_enumerate)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_distance(benchmark::State& state) {
    Field F(unsigned(state.range(0)));
    unsigned v = unsigned(state.range(1));
    std::mt19937_64 rng(1);
    std::vector<SubspaceKey> keys;
    for (int i = 0; i < 64; ++i) keys.push_back(random_subspace(F, v, 3, rng));
    size_t i = 0;
    for (auto _ : state) {
        const auto& a = keys[i % keys.size()];
        const auto& b = keys[(i * 7 + 1) % keys.size()];
        benchmark::DoNotOptimize(subspace_distance(F, a, b));
        ++i;
    }
}
BENCHMARK(BM_distance)->Args({2, 8})->Args({2, 14})->Args({3, 8});

void BM_through(benchmark::State& state) {
    Field F(2);
    unsigned v = unsigned(state.range(0));
    std::mt19937_64 rng(2);
    auto w = random_subspace(F, v, 2, rng);
    for (auto _ : state) benchmark::DoNotOptimize(subspaces_through(F, w, 3));
}
BENCHMARK(BM_through)->Arg(7)->Arg(9)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
