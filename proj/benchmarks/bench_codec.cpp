#include <benchmark/benchmark.h>

#include "lf/codec.hpp"
#include "synthetic.hpp"

namespace {

void BM_Encode(benchmark::State& state) {
    int d = static_cast<int>(state.range(0));
    lf::LightField field =
        lftest::translated_light_field(lftest::smooth_view(64, 64), 4, 4, 0.5);
    for (auto _ : state) {
        lf::EncodedStream s = lf::encode(field, {d, 50});
        benchmark::DoNotOptimize(s.payloads[0].data());
    }
    state.SetItemsProcessed(state.iterations() *
                            static_cast<std::int64_t>(field.pixel_count()));
}

void BM_Decode(benchmark::State& state) {
    int d = static_cast<int>(state.range(0));
    lf::LightField field =
        lftest::translated_light_field(lftest::smooth_view(64, 64), 4, 4, 0.5);
    std::vector<std::uint8_t> bytes = lf::encode(field, {d, 50}).serialize();
    for (auto _ : state) {
        lf::LightField out = lf::decode(bytes);
        benchmark::DoNotOptimize(out.views.data());
    }
    state.SetItemsProcessed(state.iterations() *
                            static_cast<std::int64_t>(field.pixel_count()));
}

}  // namespace

BENCHMARK(BM_Encode)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Decode)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
