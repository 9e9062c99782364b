#include <benchmark/benchmark.h>

#include "pmc/dispatch.hpp"
#include "pmc/generators.hpp"
#include "pmc/oracle.hpp"
#include "pmc/solver_clawfree.hpp"
#include "pmc/solver_diameter.hpp"
#include "pmc/treewidth.hpp"

namespace {

using namespace pmc;

void BM_OraclePetersen(benchmark::State& state) {
    Graph g = petersen_graph();
    for (auto _ : state) benchmark::DoNotOptimize(oracle_pmc(g).yes);
}
BENCHMARK(BM_OraclePetersen);

void BM_OracleDense(benchmark::State& state) {
    Rng rng(7);
    Graph g = random_connected(static_cast<int>(state.range(0)), 0.5, rng);
    for (auto _ : state) benchmark::DoNotOptimize(oracle_pmc(g).yes);
}
BENCHMARK(BM_OracleDense)->Arg(12)->Arg(16)->Arg(20);

void BM_Diam2Petersen(benchmark::State& state) {
    Graph g = petersen_graph();
    for (auto _ : state) benchmark::DoNotOptimize(solve_diam2(g).yes);
}
BENCHMARK(BM_Diam2Petersen);

void BM_BipDiam3KnnMinusPm(benchmark::State& state) {
    int k = static_cast<int>(state.range(0));
    Graph g = knn_minus_pm(k);
    std::vector<std::uint8_t> sides(2 * k, 0);
    for (int v = k; v < 2 * k; ++v) sides[v] = 1;
    for (auto _ : state) benchmark::DoNotOptimize(solve_bip_diam3(g, sides).yes);
}
BENCHMARK(BM_BipDiam3KnnMinusPm)->Arg(10)->Arg(20)->Arg(40);

void BM_ClawfreeLineGraph(benchmark::State& state) {
    Rng rng(11);
    Graph base = random_connected(static_cast<int>(state.range(0)), 0.4, rng);
    Graph g = line_graph(base);
    if (!is_connected(g)) return;
    for (auto _ : state) benchmark::DoNotOptimize(solve_clawfree(g).yes);
}
BENCHMARK(BM_ClawfreeLineGraph)->Arg(10)->Arg(16)->Arg(24);

void BM_TreewidthCycle(benchmark::State& state) {
    Graph g = cycle_graph(static_cast<int>(state.range(0)));
    TreeDecomposition td = heuristic_td(g);
    for (auto _ : state) benchmark::DoNotOptimize(solve_tw(g, td).yes);
}
BENCHMARK(BM_TreewidthCycle)->Arg(16)->Arg(32)->Arg(64);

void BM_MinFill(benchmark::State& state) {
    Rng rng(13);
    Graph g = random_connected(static_cast<int>(state.range(0)), 0.25, rng);
    for (auto _ : state) benchmark::DoNotOptimize(heuristic_td(g).width());
}
BENCHMARK(BM_MinFill)->Arg(20)->Arg(40);

} // namespace

BENCHMARK_MAIN();
