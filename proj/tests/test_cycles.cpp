#include "ramsey/cycle_search.hpp"
#include "ramsey/constructions.hpp"

#include "support/generators.hpp"
#include "support/oracles.hpp"

#include <doctest.h>

#include <set>

using namespace ramsey;
using namespace testsupport;

namespace {

SimpleGraph complete_bipartite(int a, int b) {
    SimpleGraph g(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = a; v < a + b; ++v) g.add_edge(u, v);
    return g;
}

SimpleGraph petersen() {
    SimpleGraph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);       // outer C5
        g.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
        g.add_edge(i, 5 + i);             // spokes
    }
    return g;
}

}  // namespace

TEST_SUITE("cycles") {

TEST_CASE("even cycles in complete bipartite graphs") {
    // The parity-pruned search must still see even cycles in bipartite parts.
    auto k22 = complete_bipartite(2, 2);
    auto r = find_cycle_exact(k22, 4);
    REQUIRE(found(r));
    CHECK(std::get<CycleWitness>(r).validate(k22));

    auto k33 = complete_bipartite(3, 3);
    for (int L : {4, 6}) {
        auto res = find_cycle_exact(k33, L);
        REQUIRE(found(res));
        auto w = std::get<CycleWitness>(res);
        CHECK(w.length() == L);
        CHECK(w.validate(k33));
    }
    CHECK(exhausted_absence(find_cycle_exact(k33, 5)));
    CHECK_THROWS_AS(find_cycle_exact(k33, 8), std::invalid_argument);  // beyond vertex count
    CHECK_THROWS_AS(find_cycle_exact(k33, 2), std::invalid_argument);
}

TEST_CASE("petersen graph cycle spectrum") {
    auto g = petersen();
    // lengths 5, 6, 8, 9 present; 3, 4, 7 famously absent
    for (int L : {5, 6, 8, 9}) {
        auto r = find_cycle_exact(g, L);
        REQUIRE_MESSAGE(found(r), "length " << L);
        auto w = std::get<CycleWitness>(r);
        CHECK(w.length() == L);
        CHECK(w.validate(g));
    }
    for (int L : {3, 4, 7, 10}) {
        auto r = find_cycle_exact(g, L);
        CHECK_MESSAGE(exhausted_absence(r), "length " << L);
    }
}

TEST_CASE("witness validation rejects fakes") {
    auto g = complete_bipartite(3, 3);
    CycleWitness w;
    w.vertices = {0, 3, 1, 4};
    CHECK(w.validate(g));
    w.vertices = {0, 3, 1};        // odd close-up edge 1-0 missing anyway
    CHECK_FALSE(w.validate(g));
    w.vertices = {0, 3, 0, 4};     // repeated vertex
    CHECK_FALSE(w.validate(g));
    w.vertices = {0, 1};           // too short
    CHECK_FALSE(w.validate(g));
    w.vertices = {0, 3, 1, 9};     // out of range
    CHECK_FALSE(w.validate(g));
}

TEST_CASE("budget exhaustion is reported, never fabricated") {
    // K12 certainly has a C12, but three expansions cannot reach one.
    SimpleGraph g(12);
    for (int u = 0; u < 12; ++u)
        for (int v = u + 1; v < 12; ++v) g.add_edge(u, v);
    auto r = find_cycle_exact(g, 12, 3);
    CHECK_FALSE(found(r));
    CHECK_FALSE(exhausted_absence(r));
    CHECK(std::holds_alternative<BudgetExhausted>(r));
    CHECK(stats_of(r).budget == 3);
    CHECK(stats_of(r).expansions == 3);
}

TEST_CASE("coloured overloads restrict to the colour class") {
    EdgeColouring g = eoo_construction_1(4, 5, 5);  // 12 vertices
    // red = four disjoint triangles
    auto red3 = find_cycle_exact(g, kRed, 3);
    REQUIRE(found(red3));
    CHECK(std::get<CycleWitness>(red3).colour == kRed);
    CHECK(std::get<CycleWitness>(red3).validate(g));
    CHECK(exhausted_absence(find_cycle_exact(g, kRed, 4)));
    // green spans the bipartition [V1 u V3, V2 u V4]: even cycles only
    CHECK(found(find_cycle_exact(g, kGreen, 12)));
    CHECK(exhausted_absence(find_cycle_exact(g, kGreen, 5)));

    auto mg = MultiColouredGraph::from(g);
    auto viaMulti = find_cycle_exact(mg, kGreen, 12);
    REQUIRE(found(viaMulti));
    CHECK(std::get<CycleWitness>(viaMulti).validate(mg));
}

TEST_CASE("agreement with the unpruned oracle on random graphs") {
    Rng rng(7);
    int checked = 0;
    for (int trial = 0; trial < 60; ++trial) {
        int n = 4 + static_cast<int>(trial % 5);
        auto g = random_graph(n, 0.45, rng);
        for (int L = 3; L <= n; ++L) {
            bool naive = naive_has_cycle(g, L);
            auto r = find_cycle_exact(g, L);
            if (naive) {
                REQUIRE(found(r));
                CHECK(std::get<CycleWitness>(r).length() == L);
                CHECK(std::get<CycleWitness>(r).validate(g));
            } else {
                REQUIRE(exhausted_absence(r));
            }
            ++checked;
        }
    }
    CHECK(checked > 300);
}

TEST_CASE("find_long_cycle returns a shortest qualifying length it meets") {
    auto g = petersen();
    auto r = find_long_cycle(g, 7);
    REQUIRE(found(r));
    auto w = std::get<CycleWitness>(r);
    CHECK(w.length() >= 8);  // no C7 in the Petersen graph
    CHECK(w.validate(g));
    CHECK(exhausted_absence(find_long_cycle(g, 10)));

    SimpleGraph tri(3);
    tri.add_edge(0, 1);
    tri.add_edge(1, 2);
    tri.add_edge(0, 2);
    auto t = find_long_cycle(tri, 3);
    REQUIRE(found(t));
    CHECK(std::get<CycleWitness>(t).length() == 3);
}

TEST_CASE("odd-cycle component map") {
    EdgeColouring g = eoo_construction_1(4, 5, 5);
    auto red_map = has_odd_cycle(g, kRed);
    int odd_comps = 0;
    for (bool b : red_map.odd) odd_comps += b ? 1 : 0;
    CHECK(odd_comps == 4);  // each triangle is odd
    auto red_class = g.colour_class(kRed);
    auto cyc = odd_cycle_in_component(red_class, red_map, red_map.largest());
    CHECK(cyc.size() % 2 == 1);
    CycleWitness cw{cyc, kRed};
    CHECK(cw.validate(g));

    auto green_map = has_odd_cycle(g, kGreen);
    for (bool b : green_map.odd) CHECK_FALSE(b);  // bipartite class
    CHECK_THROWS_AS(odd_cycle_in_component(g.colour_class(kGreen), green_map, 0),
                    std::invalid_argument);
}

}  // TEST_SUITE
