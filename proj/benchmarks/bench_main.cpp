#include <benchmark/benchmark.h>

#include <matchparity/billiards.hpp>
#include <matchparity/channels.hpp>
#include <matchparity/divisibility.hpp>
#include <matchparity/generators.hpp>
#include <matchparity/matching.hpp>
#include <matchparity/moves.hpp>

using namespace mpar;

namespace {

GridRegion square(benchmark::State& s) {
    int n = static_cast<int>(s.range(0));
    return GridRegion::rectangle(n, n + 1);
}

void BM_FastPathBasis(benchmark::State& s) {
    GridRegion r = square(s);
    for (auto _ : s) benchmark::DoNotOptimize(fast_path_basis(r).components);
    s.SetComplexityN(static_cast<long>(r.size()));
}
BENCHMARK(BM_FastPathBasis)->RangeMultiplier(2)->Range(8, 128)->Complexity();

void BM_InnerChannelsGF2(benchmark::State& s) {
    Graph inner = inner_region(square(s)).graph();
    for (auto _ : s) benchmark::DoNotOptimize(black_channel_dimension(inner));
    s.SetComplexityN(static_cast<long>(inner.vertex_count()));
}
BENCHMARK(BM_InnerChannelsGF2)->RangeMultiplier(2)->Range(8, 64)->Complexity();

void BM_KasteleynCount(benchmark::State& s) {
    GridRegion r = square(s);
    for (auto _ : s) benchmark::DoNotOptimize(count_matchings_kasteleyn(r));
}
BENCHMARK(BM_KasteleynCount)->DenseRange(4, 16, 4);

void BM_OracleCount(benchmark::State& s) {
    Graph g = GridRegion::rectangle(4, static_cast<int>(s.range(0))).graph();
    for (auto _ : s) benchmark::DoNotOptimize(count_matchings(g));
}
BENCHMARK(BM_OracleCount)->DenseRange(2, 8, 2);

void BM_Bareiss(benchmark::State& s) {
    Rng rng(1);
    std::size_t n = static_cast<std::size_t>(s.range(0));
    IntMatrix a = random_int_matrix(rng, n, n, -9, 9);
    for (auto _ : s) benchmark::DoNotOptimize(determinant(a));
}
BENCHMARK(BM_Bareiss)->RangeMultiplier(2)->Range(4, 64);

void BM_Reduce(benchmark::State& s) {
    Graph g = square(s).graph();
    for (auto _ : s) benchmark::DoNotOptimize(reduce(g).terminal.vertex_count());
}
BENCHMARK(BM_Reduce)->DenseRange(4, 16, 4);

}  // namespace

BENCHMARK_MAIN();
