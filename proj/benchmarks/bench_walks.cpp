#include "cayt/walks.hpp"

#include <benchmark/benchmark.h>

using namespace cayt;

namespace {

void BM_drift_z1(benchmark::State& state) {
    ZmGroup g(1);
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(walk_drift(g, n, 100, 1));
    }
    state.SetItemsProcessed(state.iterations() * 100 * n);
}
BENCHMARK(BM_drift_z1)->Arg(1000)->Arg(10000);

void BM_drift_lamplighter_s1(benchmark::State& state) {
    LamplighterGroup g(LamplighterGroup::GenSet::S1);
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(walk_drift(g, n, 100, 1));
    }
    state.SetItemsProcessed(state.iterations() * 100 * n);
}
BENCHMARK(BM_drift_lamplighter_s1)->Arg(1000)->Arg(10000);

void BM_drift_g2(benchmark::State& state) {
    G2Group g = make_g2();
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(walk_drift(g, n, 100, 1));
    }
    state.SetItemsProcessed(state.iterations() * 100 * n);
}
BENCHMARK(BM_drift_g2)->Arg(1000)->Arg(10000);

void BM_range_z1(benchmark::State& state) {
    ZmGroup g(1);
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(walk_range(g, n, 100, 1));
    }
    state.SetItemsProcessed(state.iterations() * 100 * n);
}
BENCHMARK(BM_range_z1)->Arg(1000)->Arg(10000);

void BM_lamplighter_ball(benchmark::State& state) {
    LamplighterGroup g(LamplighterGroup::GenSet::S1Prime);
    const int r = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(ball(g, r));
    }
}
BENCHMARK(BM_lamplighter_ball)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

} // namespace
