#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "lf/dct.hpp"

namespace {

std::vector<double> random_block(int d) {
    std::mt19937 rng(123);
    std::uniform_real_distribution<double> dist(-128.0, 127.0);
    std::vector<double> block(lf::block_size(d));
    for (auto& v : block) v = dist(rng);
    return block;
}

void BM_DctForward(benchmark::State& state) {
    int d = static_cast<int>(state.range(0));
    std::vector<double> block = random_block(d);
    for (auto _ : state) {
        std::vector<double> work = block;
        lf::dct_forward(work, d);
        benchmark::DoNotOptimize(work.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(block.size()));
}

void BM_DctRoundTrip(benchmark::State& state) {
    int d = static_cast<int>(state.range(0));
    std::vector<double> block = random_block(d);
    for (auto _ : state) {
        std::vector<double> work = block;
        lf::dct_forward(work, d);
        lf::dct_inverse(work, d);
        benchmark::DoNotOptimize(work.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(block.size()));
}

}  // namespace

BENCHMARK(BM_DctForward)->Arg(2)->Arg(3)->Arg(4);
BENCHMARK(BM_DctRoundTrip)->Arg(2)->Arg(3)->Arg(4);

BENCHMARK_MAIN();
