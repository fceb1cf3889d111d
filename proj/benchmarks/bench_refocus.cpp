#include <benchmark/benchmark.h>

#include "lf/refocus.hpp"
#include "synthetic.hpp"

namespace {

void BM_RenderRefocused(benchmark::State& state) {
    int grid = static_cast<int>(state.range(0));
    lf::PlanarField pf = lf::to_planar(
        lftest::translated_light_field(lftest::smooth_view(64, 64), grid, grid, 0.5));
    for (auto _ : state) {
        lf::RenderedView rv = lf::render_refocused(pf, {0.37});
        benchmark::DoNotOptimize(rv.channels[0].data());
    }
    state.SetItemsProcessed(state.iterations() *
                            static_cast<std::int64_t>(pf.plane_size()));
}

void BM_FocalStack(benchmark::State& state) {
    lf::PlanarField pf = lf::to_planar(
        lftest::translated_light_field(lftest::smooth_view(64, 64), 5, 5, 0.5));
    std::vector<double> alphas = lf::make_alpha_sweep(-1.0, 1.0, 5);
    for (auto _ : state) {
        lf::FocalStack stack = lf::render_focal_stack(pf, alphas);
        benchmark::DoNotOptimize(stack.views.data());
    }
}

}  // namespace

BENCHMARK(BM_RenderRefocused)->Arg(3)->Arg(5)->Arg(9)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FocalStack)->Unit(benchmark::kMillisecond);
