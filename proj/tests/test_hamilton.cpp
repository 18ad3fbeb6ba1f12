#include "ramsey/hamilton.hpp"

#include "support/generators.hpp"
#include "support/oracles.hpp"

#include <doctest.h>

#include <algorithm>

using namespace ramsey;
using namespace testsupport;

namespace {

SimpleGraph cycle_graph(int n) {
    SimpleGraph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

SimpleGraph complete_graph(int n) {
    SimpleGraph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

}  // namespace

TEST_SUITE("hamilton") {

TEST_CASE("sufficient conditions on reference graphs") {
    CHECK(dirac_check(complete_graph(5)));
    CHECK(dirac_check(cycle_graph(4)));
    CHECK_FALSE(dirac_check(cycle_graph(5)));  // degree 2 < 5/2
    SimpleGraph two(2);
    two.add_edge(0, 1);
    CHECK_FALSE(dirac_check(two));  // below n >= 3

    // Chvátal accepts some graphs Dirac rejects: K1 + (K1 u K3) style wheel-ish
    // degree sequence. Take C5 with two chords meeting at 0: degrees 4,3,2,2,3.
    SimpleGraph g(5);
    for (int i = 0; i < 5; ++i) g.add_edge(i, (i + 1) % 5);
    g.add_edge(0, 2);
    g.add_edge(0, 3);
    CHECK_FALSE(dirac_check(g));
    CHECK(chvatal_check(g));
    CHECK_FALSE(chvatal_check(cycle_graph(6)));

    // Moon-Moser on balanced bipartite graphs
    SimpleGraph b = complete_graph(6);
    VertexSet X{0, 1, 2}, Y{3, 4, 5};
    SimpleGraph kb(6);
    for (int x : X)
        for (int y : Y) kb.add_edge(x, y);
    CHECK(moon_moser_check(kb, X, Y));
    CHECK_THROWS_AS(moon_moser_check(kb, VertexSet{0, 1}, VertexSet{2, 3, 4, 5}),
                    std::invalid_argument);  // unbalanced
    CHECK_THROWS_AS(moon_moser_check(b, X, Y), std::invalid_argument);  // non-cross edges
    // C6 sits exactly on the degree threshold; C8 falls below it
    SimpleGraph c6 = cycle_graph(6);
    CHECK(moon_moser_check(c6, VertexSet{0, 2, 4}, VertexSet{1, 3, 5}));
    SimpleGraph c8 = cycle_graph(8);
    CHECK_FALSE(moon_moser_check(c8, VertexSet{0, 2, 4, 6}, VertexSet{1, 3, 5, 7}));
}

TEST_CASE("hamiltonian_cycle finds cycles exactly when they exist") {
    auto r = hamiltonian_cycle(complete_graph(6));
    REQUIRE(found(r));
    CHECK(std::get<CycleWitness>(r).length() == 6);
    CHECK(std::get<CycleWitness>(r).validate(complete_graph(6)));

    // Petersen graph: famously not Hamiltonian
    SimpleGraph pet(10);
    for (int i = 0; i < 5; ++i) {
        pet.add_edge(i, (i + 1) % 5);
        pet.add_edge(5 + i, 5 + (i + 2) % 5);
        pet.add_edge(i, 5 + i);
    }
    CHECK(exhausted_absence(hamiltonian_cycle(pet)));
}

TEST_CASE("every sufficient condition implies a cycle we can exhibit") {
    // exhaustive over isomorphism classes up to 7 vertices
    for (int n = 3; n <= 7; ++n) {
        for (const auto& g : all_graphs_up_to_iso(n)) {
            bool promised = dirac_check(g) || chvatal_check(g);
            if (!promised) continue;
            auto r = hamiltonian_cycle(g);
            REQUIRE(found(r));
            auto w = std::get<CycleWitness>(r);
            CHECK(w.length() == g.vertex_count());
            CHECK(w.validate(g));
        }
    }
    // random bipartite instances for Moon-Moser
    Rng rng(3);
    int hits = 0;
    for (int trial = 0; trial < 300; ++trial) {
        int half = 2 + static_cast<int>(trial % 5);
        auto g = random_bipartite(half, 0.8, rng);
        VertexSet X, Y;
        for (int v = 0; v < half; ++v) X.push_back(v);
        for (int v = half; v < 2 * half; ++v) Y.push_back(v);
        if (!moon_moser_check(g, X, Y)) continue;
        auto r = hamiltonian_cycle(g);
        REQUIRE(found(r));
        CHECK(std::get<CycleWitness>(r).length() == 2 * half);
        ++hits;
    }
    CHECK(hits > 50);
}

TEST_CASE("hamiltonian paths between fixed endpoints") {
    auto k6 = complete_graph(6);
    for (int v = 1; v < 6; ++v) {
        auto r = hamiltonian_path_between(k6, 0, v);
        REQUIRE(std::holds_alternative<PathWitness>(r));
        auto w = std::get<PathWitness>(r);
        CHECK(w.length() == 5);
        CHECK(w.vertices.front() == 0);
        CHECK(w.vertices.back() == v);
        CHECK(w.validate(k6));
    }
    // P4 admits a Hamilton path only between its two leaves
    SimpleGraph p(4);
    for (int i = 0; i + 1 < 4; ++i) p.add_edge(i, i + 1);
    CHECK(std::holds_alternative<PathWitness>(hamiltonian_path_between(p, 0, 3)));
    CHECK(std::holds_alternative<AbsenceCertificate>(hamiltonian_path_between(p, 0, 2)));

    // the constructive closure route must agree with DFS on dense graphs
    Rng rng(9);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 6 + static_cast<int>(trial % 5);
        auto g = random_graph(n, 0.9, rng);
        int mindeg = n;
        for (int v = 0; v < n; ++v) mindeg = std::min(mindeg, g.degree(v));
        if (2 * mindeg < n + 2) continue;  // outside the constructive regime
        auto r = hamiltonian_path_between(g, 0, n - 1);
        REQUIRE(std::holds_alternative<PathWitness>(r));
        CHECK(std::get<PathWitness>(r).validate(g));
    }
}

TEST_CASE("path witness validation") {
    auto k4 = complete_graph(4);
    PathWitness w;
    w.vertices = {0, 1, 2, 3};
    CHECK(w.validate(k4));
    CHECK(w.length() == 3);
    w.vertices = {0, 1, 1, 3};
    CHECK_FALSE(w.validate(k4));
    w.vertices = {0};
    CHECK(w.length() == 0);
    SimpleGraph e2(2);
    w.vertices = {0, 1};
    CHECK_FALSE(w.validate(e2));  // edge absent
}

TEST_CASE("alternating path through all of the smaller side") {
    // X1 = 5 vertices, X2 = 3, complete cross edges
    SimpleGraph g(8);
    VertexSet X1{0, 1, 2, 3, 4}, X2{5, 6, 7};
    for (int a : X1)
        for (int b : X2) g.add_edge(a, b);
    auto w = bipartite_path_all_of_smaller(g, X1, X2, 0, 1);
    CHECK(w.vertices.front() == 0);
    CHECK(w.vertices.back() == 1);
    CHECK(w.length() == 2 * 3);  // alternates, uses all of X2
    CHECK(w.validate(g));
    for (int b : X2)
        CHECK(std::find(w.vertices.begin(), w.vertices.end(), b) != w.vertices.end());

    // sides must partition the vertex set
    CHECK_THROWS_AS(bipartite_path_all_of_smaller(g, VertexSet{0, 1, 2, 3}, X2, 0, 1),
                    std::invalid_argument);

    // |X1| = |X2| + 1 is not enough room
    SimpleGraph g7(7);
    VertexSet A{0, 1, 2, 3}, B{4, 5, 6};
    for (int a : A)
        for (int b : B) g7.add_edge(a, b);
    CHECK_THROWS_AS(bipartite_path_all_of_smaller(g7, A, B, 0, 1), hypothesis_error);
}

TEST_CASE("erdos-gallai edge threshold") {
    // e >= (m-1)(K-1)/2 + 1
    auto k5 = complete_graph(5);  // 10 edges, K = 5
    CHECK(erdos_gallai_guarantee(k5, 5));   // 10 >= 9
    CHECK(erdos_gallai_guarantee(k5, 3));
    auto c5 = cycle_graph(5);  // 5 edges
    CHECK(erdos_gallai_guarantee(c5, 3));   // 5 >= 5
    CHECK_FALSE(erdos_gallai_guarantee(c5, 4));  // 5 < 7
    CHECK_THROWS_AS(erdos_gallai_guarantee(k5, 2), std::invalid_argument);
    CHECK_THROWS_AS(erdos_gallai_guarantee(k5, 6), std::invalid_argument);
}

TEST_CASE("erdos-gallai threshold forces a long cycle on sampled graphs") {
    Rng rng(13);
    int hits = 0;
    for (int trial = 0; trial < 250; ++trial) {
        int n = 4 + static_cast<int>(trial % 5);
        auto g = random_graph(n, 0.7, rng);
        for (int m = 3; m <= n; ++m) {
            if (!erdos_gallai_guarantee(g, m)) continue;
            auto r = find_long_cycle(g, m);
            REQUIRE(found(r));
            CHECK(std::get<CycleWitness>(r).length() >= m);
            ++hits;
        }
    }
    CHECK(hits > 100);
}

}  // TEST_SUITE
