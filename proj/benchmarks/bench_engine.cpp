#include <benchmark/benchmark.h>

#include "dirres/generators.hpp"
#include "dirres/linalg.hpp"
#include "dirres/resistance.hpp"

namespace {

dirres::Digraph make_er_scc(std::size_t n, std::uint64_t seed) {
    const dirres::Digraph full = dirres::gen_directed_er(n, 10.0 / static_cast<double>(n), seed);
    return dirres::largest_scc(full).graph;
}

void BM_EngineBuild(benchmark::State& state) {
    const dirres::Digraph g = make_er_scc(static_cast<std::size_t>(state.range(0)), 7);
    for (auto _ : state) {
        dirres::ResistanceEngine engine(g);
        benchmark::DoNotOptimize(engine.kirchhoff_index());
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_EngineBuild)->Arg(64)->Arg(128)->Arg(256)->Complexity(benchmark::oNCubed);

void BM_PairwiseQuery(benchmark::State& state) {
    const dirres::Digraph g = make_er_scc(256, 7);
    const dirres::ResistanceEngine engine(g);
    std::size_t i = 0;
    for (auto _ : state) {
        const std::size_t a = i % engine.order();
        const std::size_t b = (i * 17 + 1) % engine.order();
        benchmark::DoNotOptimize(engine.resistance(a, b == a ? (a + 1) % engine.order() : b));
        ++i;
    }
}
BENCHMARK(BM_PairwiseQuery);

void BM_PseudoinverseLaplacian(benchmark::State& state) {
    const dirres::Digraph g = make_er_scc(static_cast<std::size_t>(state.range(0)), 11);
    const dirres::DenseMatrix l = dirres::digraph_laplacian(g);
    for (auto _ : state) {
        benchmark::DoNotOptimize(dirres::pseudoinverse_laplacian(l).matrix.max_abs());
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_PseudoinverseLaplacian)->Arg(64)->Arg(128)->Arg(256)->Complexity(benchmark::oNCubed);

} // namespace

BENCHMARK_MAIN();
