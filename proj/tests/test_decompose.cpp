#include "ramsey/decompose.hpp"
#include "ramsey/constructions.hpp"

#include "support/generators.hpp"
#include "support/oracles.hpp"

#include <doctest.h>

#include <algorithm>

using namespace ramsey;
using namespace testsupport;

TEST_SUITE("decompose") {

TEST_CASE("triangles plus a bipartite piece split cleanly") {
    // component 1: triangle (odd), component 2: C4 (bipartite), isolated vertex
    SimpleGraph g(8);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(0, 2);
    for (int i = 3; i < 7; ++i) g.add_edge(i, i == 6 ? 3 : i + 1);
    auto d = decompose_no_odd_matching_in(g, 3);
    CHECK(d.m == 3);
    // triangle lands in V'', C4 and the isolated vertex in V'
    CHECK(d.v_doubleprime == VertexSet{0, 1, 2});
    VertexSet expected_prime{3, 4, 5, 6, 7};
    CHECK(d.v_prime == expected_prime);

    auto rep = verify_decomposition_in(g, d);
    CHECK(rep.all());
    CHECK(rep.doubleprime_edges == 3);

    // m = 3 fails when an odd component carries a matching on >= 3 vertices
    // (any triangle matching covers only 2, so bump the component)
    SimpleGraph big(5);
    big.add_edge(0, 1);
    big.add_edge(1, 2);
    big.add_edge(0, 2);
    big.add_edge(2, 3);
    big.add_edge(3, 4);  // odd component with a 2-edge matching
    CHECK_THROWS_AS(decompose_no_odd_matching_in(big, 3), decomposition_hypothesis_error);
    try {
        decompose_no_odd_matching_in(big, 3);
    } catch (const decomposition_hypothesis_error& e) {
        CHECK(e.counterexample.vertex_count() >= 3);
        CHECK(e.counterexample.odd);
        CHECK(e.counterexample.validate(big));
    }
    // with m = 5 the same component is acceptable
    auto d5 = decompose_no_odd_matching_in(big, 5);
    CHECK(verify_decomposition_in(big, d5).all());
}

TEST_CASE("coloured overloads work on the extremal construction") {
    // red class of the first construction: disjoint K_{n-1} cliques, all odd,
    // each with a matching on n-2 vertices; m = n-1 admits them all
    EdgeColouring g = eoo_construction_1(6, 7, 7);
    auto d = decompose_no_odd_matching(g, kRed, 5);
    CHECK(d.v_prime.empty());
    CHECK(static_cast<int>(d.v_doubleprime.size()) == g.vertex_count());
    CHECK(verify_decomposition(g, kRed, d).all());
    CHECK_THROWS_AS(decompose_no_odd_matching(g, kRed, 4), decomposition_hypothesis_error);

    // green class is bipartite: everything goes to V'
    auto dg = decompose_no_odd_matching(g, kGreen, 3);
    CHECK(dg.v_doubleprime.empty());
    CHECK(verify_decomposition(g, kGreen, dg).all());

    auto mg = MultiColouredGraph::from(g);
    auto dm = decompose_no_odd_matching(mg, kGreen, 3);
    CHECK(verify_decomposition(mg, kGreen, dm).all());
}

TEST_CASE("verifier catches every violated condition separately") {
    // host: triangle {0,1,2} and a path 3-4 plus crossing-candidate vertices
    SimpleGraph g(6);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(0, 2);
    g.add_edge(3, 4);
    g.add_edge(2, 3);  // will cross once we split badly

    Decomposition d;
    d.v_prime = {0, 1, 2};  // triangle inside V': not bipartite
    d.v_doubleprime = {3, 4, 5};
    d.m = 3;
    auto rep = verify_decomposition_in(g, d);
    CHECK_FALSE(rep.v_prime_bipartite);
    REQUIRE(rep.odd_cycle_witness.has_value());
    CHECK(rep.odd_cycle_witness->size() == 3);
    CHECK_FALSE(rep.doubleprime_components_odd);  // 3-4 is a bipartite component
    REQUIRE(rep.even_component_witness.has_value());
    CHECK_FALSE(rep.no_crossing);
    REQUIRE(rep.crossing_edge.has_value());
    CHECK(*rep.crossing_edge == std::pair<int, int>{2, 3});
    CHECK_FALSE(rep.all());

    // edge bound violation: K4 in V'' with m = 3 has 6 > 3*4/2 edges... equal;
    // use m = 2 barred by the interface, so take K5 with m = 3: 10 > 7.5
    SimpleGraph k5(5);
    for (int u = 0; u < 5; ++u)
        for (int v = u + 1; v < 5; ++v) k5.add_edge(u, v);
    Decomposition dk;
    dk.v_doubleprime = {0, 1, 2, 3, 4};
    dk.m = 3;
    auto repk = verify_decomposition_in(k5, dk);
    CHECK(repk.doubleprime_components_odd);
    CHECK_FALSE(repk.edge_bound);
    CHECK(repk.doubleprime_edges == 10);
    CHECK(repk.edge_bound_value == Rational(15, 2));

    // overlapping parts must be rejected outright
    Decomposition bad;
    bad.v_prime = {0, 1};
    bad.v_doubleprime = {1, 2};
    bad.m = 3;
    CHECK_THROWS_AS(verify_decomposition_in(g, bad), std::invalid_argument);
}

TEST_CASE("random graphs below the matching threshold always decompose") {
    Rng rng(29);
    int done = 0;
    for (int trial = 0; trial < 400; ++trial) {
        int n = 4 + static_cast<int>(trial % 7);
        auto g = random_graph(n, 0.3, rng);
        // largest odd connected matching, in vertices
        int t = oracle_largest_connected_matching(g, true);
        int m = std::max(3, t + 1);
        if (m > n) continue;  // interface requires m <= K
        auto d = decompose_no_odd_matching_in(g, m);
        auto rep = verify_decomposition_in(g, d);
        CHECK(rep.all());
        // parts partition the vertex set
        CHECK(d.v_prime.size() + d.v_doubleprime.size() == static_cast<std::size_t>(n));
        ++done;
    }
    CHECK(done > 300);
}

}  // TEST_SUITE
