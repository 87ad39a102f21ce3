#include <benchmark/benchmark.h>

#include "dirres/generators.hpp"
#include "dirres/linalg.hpp"
#include "dirres/rdm.hpp"
#include "dirres/resistance.hpp"

namespace {

dirres::Digraph make_er_scc(std::size_t n, std::uint64_t seed) {
    const dirres::Digraph full = dirres::gen_directed_er(n, 10.0 / static_cast<double>(n), seed);
    return dirres::largest_scc(full).graph;
}

void BM_GreedySelection(benchmark::State& state) {
    const dirres::Digraph g = make_er_scc(static_cast<std::size_t>(state.range(0)), 3);
    const dirres::ResistanceEngine engine(g);
    for (auto _ : state) {
        benchmark::DoNotOptimize(dirres::greedy_rdm(engine, 6).objective);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_GreedySelection)->Arg(64)->Arg(128)->Arg(256)->Complexity(benchmark::oNSquared);

void BM_RankOneDowndate(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const dirres::Digraph g = make_er_scc(n, 5);
    const dirres::DenseMatrix l = dirres::digraph_laplacian(g);
    const dirres::Submatrix sub = dirres::submatrix_removing(l, {0});
    const dirres::DenseMatrix inv = dirres::lu_inverse(sub.matrix);
    for (auto _ : state) {
        benchmark::DoNotOptimize(dirres::rank_one_downdate(inv, 1).max_abs());
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_RankOneDowndate)->Arg(64)->Arg(128)->Arg(256)->Complexity(benchmark::oNSquared);

void BM_DirectReinversion(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const dirres::Digraph g = make_er_scc(n, 5);
    const dirres::DenseMatrix l = dirres::digraph_laplacian(g);
    for (auto _ : state) {
        const dirres::Submatrix sub = dirres::submatrix_removing(l, {0, 1});
        benchmark::DoNotOptimize(dirres::lu_inverse(sub.matrix).max_abs());
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_DirectReinversion)->Arg(64)->Arg(128)->Arg(256)->Complexity(benchmark::oNCubed);

} // namespace
