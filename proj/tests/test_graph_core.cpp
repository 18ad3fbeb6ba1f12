#include "ramsey/components.hpp"
#include "ramsey/cycle_search.hpp"
#include "ramsey/json_io.hpp"
#include "ramsey/predicates.hpp"

#include "support/generators.hpp"

#include <doctest.h>

using namespace ramsey;

TEST_SUITE("graph_core") {

TEST_CASE("simple graph basics and induced subgraphs") {
    SimpleGraph g(5);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(3, 4);
    CHECK(g.edge_count() == 3);
    CHECK(g.degree(1) == 2);
    CHECK(g.min_degree() == 1);

    SimpleGraph h = g.induced({1, 2, 4});
    CHECK(h.vertex_count() == 3);
    CHECK(h.has_edge(0, 1));  // 1-2 survives as 0-1
    CHECK(h.edge_count() == 1);

    CHECK_THROWS_AS(g.add_edge(0, 0), std::invalid_argument);
    CHECK_THROWS_AS((void)g.has_edge(0, 9), std::out_of_range);
}

TEST_CASE("vertex set helpers") {
    VertexSet vs = normalise_vertex_set({4, 1, 1, 3}, 5);
    CHECK(vs == VertexSet{1, 3, 4});
    CHECK_THROWS_AS(normalise_vertex_set({5}, 5), std::out_of_range);
    CHECK(sets_disjoint({1, 3}, {2, 4}));
    CHECK_FALSE(sets_disjoint({1, 3}, {3}));
    CHECK(set_union({1, 3}, {2, 3}) == VertexSet{1, 2, 3});
    CHECK(set_difference({1, 2, 3}, {2}) == VertexSet{1, 3});
}

TEST_CASE("edge colourings track totality") {
    EdgeColouring g(4, 2);
    CHECK_FALSE(g.is_total());
    CHECK(g.first_unset() == std::pair{0, 1});
    for (int v = 1; v < 4; ++v)
        for (int u = 0; u < v; ++u) g.set(u, v, Colour{(u + v) % 2});
    CHECK(g.is_total());
    CHECK_FALSE(g.first_unset().has_value());
    g.unset(1, 3);
    CHECK_FALSE(g.is_total());
    CHECK_THROWS_AS((void)g.colour_of(1, 3), std::logic_error);
    CHECK(g.colour_class(Colour{1}).has_edge(0, 1));
}

TEST_CASE("multicoloured graphs round-trip from edge colourings") {
    testsupport::Rng rng(11);
    EdgeColouring g = testsupport::random_colouring(7, 3, rng);
    MultiColouredGraph m = MultiColouredGraph::from(g);
    for (int v = 1; v < 7; ++v)
        for (int u = 0; u < v; ++u) {
            CHECK(m.colours_of(u, v).is_exactly(g.colour_of(u, v)));
        }
    CHECK(m.presence_graph().edge_count() == 21);
    CHECK(m.edge_count() == 21);
}

TEST_CASE("components split parity correctly") {
    SimpleGraph g(7);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 0);  // triangle: odd
    g.add_edge(3, 4);
    g.add_edge(4, 5);  // path: even
    ComponentMap cm = components(g);
    CHECK(cm.count() == 3);  // triangle, path, isolated 6
    CHECK(cm.odd[cm.comp[0]]);
    CHECK_FALSE(cm.odd[cm.comp[3]]);
    CHECK_FALSE(cm.odd[cm.comp[6]]);
    CHECK(cm.any_odd());

    auto cyc = odd_cycle_in_component(g, cm, cm.comp[0]);
    CHECK(cyc.size() % 2 == 1);
    CycleWitness w{cyc, Colour{0}};
    CHECK(w.validate(g));
}

TEST_CASE("density and degree predicates") {
    SimpleGraph g(6);
    for (int u = 0; u < 3; ++u)
        for (int v = 3; v < 6; ++v)
            if (!(u == 0 && v == 3)) g.add_edge(u, v);
    CHECK(density(g, {0, 1, 2}, {3, 4, 5}) == Rational(8, 9));
    CHECK(cross_edge_count(g, {0, 1, 2}, {3, 4, 5}) == 8);

    CHECK(is_almost_complete_bipartite(g, {0, 1, 2}, {3, 4, 5}, Rational(1)));
    CHECK_FALSE(is_almost_complete_bipartite(g, {0, 1, 2}, {3, 4, 5}, Rational(0)));
    CHECK(is_complete_fraction_bipartite(g, {0, 1, 2}, {3, 4, 5}, Rational(1, 3)));
    CHECK_FALSE(is_sparse_bipartite(g, {0, 1, 2}, {3, 4, 5}, Rational(1, 2)));

    SimpleGraph k = SimpleGraph::complete(5);
    CHECK(is_almost_complete(k, Rational(0)));
    CHECK(is_complete_fraction(k, Rational(0)));
    k.remove_edge(0, 1);
    CHECK_FALSE(is_almost_complete(k, Rational(0)));
    CHECK(is_almost_complete(k, Rational(1)));
    CHECK(is_sparse(k, Rational(1)));
}

TEST_CASE("json round-trips preserve graphs exactly") {
    testsupport::Rng rng(5);
    EdgeColouring g = testsupport::random_colouring(8, 3, rng);
    auto j = to_json(g);
    EdgeColouring back = edge_colouring_from_json(j);
    CHECK(to_json(back) == j);
    CHECK(back.vertex_count() == 8);
    for (int v = 1; v < 8; ++v)
        for (int u = 0; u < v; ++u) CHECK(back.colour_of(u, v) == g.colour_of(u, v));

    MultiColouredGraph m(5, 3);
    m.add_colour(0, 1, kRed);
    m.add_colour(0, 1, kGreen);
    m.add_colour(2, 3, kBlue);
    auto jm = to_json(m);
    MultiColouredGraph mb = multicoloured_from_json(jm);
    CHECK(to_json(mb) == jm);
    CHECK(mb.colours_of(0, 1).count() == 2);

    CHECK_THROWS_AS(edge_colouring_from_json(nlohmann::json::array()), std::invalid_argument);
}

}  // TEST_SUITE
