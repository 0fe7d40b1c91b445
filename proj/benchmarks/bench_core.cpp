#include <benchmark/benchmark.h>

#include "bagwhisker/bag.hpp"
#include "bagwhisker/depth.hpp"
#include "bagwhisker/geometry.hpp"
#include "bagwhisker/pipeline.hpp"
#include "bagwhisker/robust_scatter.hpp"
#include "bagwhisker/sim.hpp"

using namespace bagwhisker;

namespace {

Dataset normal_cloud(std::size_t n) {
    MixtureSpec spec;
    spec.n = n;
    spec.contamination = 0.0;
    spec.mu0 = {0.0, 0.0};
    spec.seed = 99;
    return gen_mixture(spec).data;
}

} // namespace

static void BM_ConvexHull(benchmark::State& state) {
    const Dataset d = normal_cloud(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        auto hull = convex_hull(d.points);
        benchmark::DoNotOptimize(hull);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ConvexHull)->RangeMultiplier(4)->Range(256, 65536)->Complexity();

static void BM_DepthExactPoint(benchmark::State& state) {
    const Dataset d = normal_cloud(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(halfspace_depth_exact(d[0], d));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_DepthExactPoint)->RangeMultiplier(4)->Range(256, 16384)->Complexity();

static void BM_DepthProfileExact(benchmark::State& state) {
    const Dataset d = normal_cloud(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        auto profile = depth_profile(d, DepthOptions{});
        benchmark::DoNotOptimize(profile);
    }
}
BENCHMARK(BM_DepthProfileExact)->Arg(256)->Arg(1024)->Arg(4096)->Unit(benchmark::kMillisecond);

static void BM_DepthProfileDirectional(benchmark::State& state) {
    const Dataset d = normal_cloud(static_cast<std::size_t>(state.range(0)));
    DepthOptions opts;
    opts.mode = DepthMode::Approx;
    for (auto _ : state) {
        auto profile = depth_profile(d, opts);
        benchmark::DoNotOptimize(profile);
    }
}
BENCHMARK(BM_DepthProfileDirectional)
    ->Arg(1024)
    ->Arg(8192)
    ->Arg(65536)
    ->Unit(benchmark::kMillisecond);

static void BM_FastMcd(benchmark::State& state) {
    const Dataset d = normal_cloud(static_cast<std::size_t>(state.range(0)));
    McdConfig cfg;
    cfg.exhaustive_limit = 0;
    for (auto _ : state) {
        auto raw = mcd_raw(d, default_h(d.size()), cfg);
        benchmark::DoNotOptimize(raw);
    }
}
BENCHMARK(BM_FastMcd)->Arg(1000)->Arg(5000)->Arg(20000)->Unit(benchmark::kMillisecond);

static void BM_FullPipeline(benchmark::State& state) {
    const Dataset d = normal_cloud(static_cast<std::size_t>(state.range(0)));
    DepthOptions opts;
    opts.mode = DepthMode::Approx;
    for (auto _ : state) {
        auto model = compute_model(d, TestMethod::FwerHolm, 0.1, opts);
        benchmark::DoNotOptimize(model);
    }
}
BENCHMARK(BM_FullPipeline)->Arg(1000)->Arg(5000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
