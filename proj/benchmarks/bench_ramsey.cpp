// Microbenchmarks for the hot paths: exhaustive cycle certification, maximum
// matching, reduced-graph construction, and the exact small-order scan.

#include "ramsey/constructions.hpp"
#include "ramsey/cycle_search.hpp"
#include "ramsey/matching.hpp"
#include "ramsey/partition.hpp"
#include "ramsey/ramsey_search.hpp"
#include "ramsey/reduced_graph.hpp"

#include <benchmark/benchmark.h>

#include <random>

namespace {

using namespace ramsey;

SimpleGraph seeded_graph(int n, double p, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(p);
    SimpleGraph g(n);
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

void BM_certify_headline(benchmark::State& state) {
    const EdgeColouring g = extremal_for(8, 7, 7);
    const RamseySpec spec = eoo_spec(8, 7, 7);
    for (auto _ : state) {
        const Certificate cert = verify_lower_bound(g, spec);
        benchmark::DoNotOptimize(cert.verified);
    }
}
BENCHMARK(BM_certify_headline);

void BM_absence_two_colour(benchmark::State& state) {
    const EdgeColouring g = two_colour_even_extremal(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        const CycleSearchResult res =
            find_cycle_exact(g.colour_class(Colour{1}), static_cast<int>(state.range(0)));
        benchmark::DoNotOptimize(exhausted_absence(res));
    }
}
BENCHMARK(BM_absence_two_colour)->Arg(8)->Arg(10);

void BM_max_matching(benchmark::State& state) {
    const SimpleGraph g = seeded_graph(static_cast<int>(state.range(0)), 0.3, 7);
    for (auto _ : state) {
        const Matching m = max_matching(g);
        benchmark::DoNotOptimize(m.size());
    }
}
BENCHMARK(BM_max_matching)->Arg(30)->Arg(60)->Arg(120);

void BM_reduced_graph_exact(benchmark::State& state) {
    const EdgeColouring host = eoo_construction_1(8, 7, 7);  // 28 vertices
    const Partition pi = equitable_random_partition(host.vertex_count(), 4, 1);
    for (auto _ : state) {
        const ReducedGraph rg = build_reduced_graph(host, pi, Rational(1, 4), Rational(1, 2),
                                                    RegularityMode::exact);
        benchmark::DoNotOptimize(rg.regular_pairs.edge_count());
    }
}
BENCHMARK(BM_reduced_graph_exact);

void BM_ramsey_scan_c3c3(benchmark::State& state) {
    RamseySpec spec;
    spec.targets.targets = {CycleTarget{3}, CycleTarget{3}};
    for (auto _ : state) {
        const RamseyScan scan = ramsey_exact(spec, 3, 6);
        benchmark::DoNotOptimize(scan.value);
    }
}
BENCHMARK(BM_ramsey_scan_c3c3);

}  // namespace

BENCHMARK_MAIN();
