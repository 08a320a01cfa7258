#include "cayt/characteristics.hpp"
#include "cayt/transducer.hpp"

#include <benchmark/benchmark.h>

using namespace cayt;

namespace {

void BM_translate_f2(benchmark::State& state) {
    static ClassTTransducer t = ClassTTransducer::from_presentation(GraphPresentation::free_group(2));
    const auto len = static_cast<std::size_t>(state.range(0));
    Word x;
    for (std::size_t i = 0; i < len; ++i) x.push_back(static_cast<char>(2 * (i % 2))); // abab...
    for (auto _ : state) {
        benchmark::DoNotOptimize(t.translate(x));
    }
    state.SetItemsProcessed(state.iterations() * 4);
}
BENCHMARK(BM_translate_f2)->Arg(4)->Arg(16)->Arg(64);

void BM_translate_lamplighter(benchmark::State& state) {
    static ClassTTransducer t = ClassTTransducer::from_presentation(GraphPresentation::lamplighter());
    Word x = t.base_word();
    for (int i = 0; i < state.range(0); ++i) x = t.presentation().apply_edge(0, x);
    for (auto _ : state) {
        benchmark::DoNotOptimize(t.translate(x));
    }
    state.SetItemsProcessed(state.iterations() * 3);
}
BENCHMARK(BM_translate_lamplighter)->Arg(4)->Arg(16)->Arg(64);

void BM_growth_frontier(benchmark::State& state) {
    static ClassTTransducer t = ClassTTransducer::from_presentation(GraphPresentation::free_group(2));
    const int horizon = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(growth(t, horizon));
    }
}
BENCHMARK(BM_growth_frontier)->Arg(6)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_avg_length_exact(benchmark::State& state) {
    static ClassTTransducer t = ClassTTransducer::from_presentation(GraphPresentation::lamplighter());
    const int horizon = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(avg_length_exact(t, horizon));
    }
}
BENCHMARK(BM_avg_length_exact)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

} // namespace
