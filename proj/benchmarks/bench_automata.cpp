#include "cayt/presentation.hpp"
#include "cayt/transducer.hpp"

#include <benchmark/benchmark.h>

using namespace cayt;

namespace {

const GraphPresentation& lamp() {
    static GraphPresentation p = GraphPresentation::lamplighter();
    return p;
}

void BM_minimize_edge(benchmark::State& state) {
    const SyncAutomaton& edge = lamp().edge(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(minimize(edge));
    }
}
BENCHMARK(BM_minimize_edge);

void BM_determinize_edge(benchmark::State& state) {
    const SyncAutomaton& edge = lamp().edge(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(determinize(edge));
    }
}
BENCHMARK(BM_determinize_edge);

void BM_compose_edges(benchmark::State& state) {
    const SyncAutomaton& t = lamp().edge(0);
    const SyncAutomaton& h = lamp().edge(2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(compose(t, h));
    }
}
BENCHMARK(BM_compose_edges);

void BM_joint_automaton(benchmark::State& state) {
    static ClassTTransducer t = ClassTTransducer::from_presentation(GraphPresentation::lamplighter_s1());
    for (auto _ : state) {
        benchmark::DoNotOptimize(t.joint_automaton());
    }
}
BENCHMARK(BM_joint_automaton);

void BM_build_lamplighter_presentation(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(GraphPresentation::lamplighter());
    }
}
BENCHMARK(BM_build_lamplighter_presentation);

void BM_validate_presentation(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(lamp().validate());
    }
}
BENCHMARK(BM_validate_presentation);

} // namespace

BENCHMARK_MAIN();
