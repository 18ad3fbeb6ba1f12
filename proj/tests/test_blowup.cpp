#include "ramsey/blowup.hpp"

#include "support/generators.hpp"

#include <doctest.h>

#include <algorithm>

using namespace ramsey;
using namespace testsupport;

namespace {

VertexSet range_set(int lo, int hi) {
    VertexSet s;
    for (int v = lo; v < hi; ++v) s.push_back(v);
    return s;
}

SimpleGraph complete_cross(int n, const VertexSet& a, const VertexSet& b) {
    SimpleGraph g(n);
    for (int u : a)
        for (int v : b) g.add_edge(u, v);
    return g;
}

}  // namespace

TEST_SUITE("blowup") {

TEST_CASE("long path length cap") {
    // ell <= k - 2*sqrt(eps)*k; eps = 1/100 gives ell <= 0.8k
    CHECK(long_path_max_ell(20, Rational(1, 100)) == 16);
    CHECK(long_path_max_ell(10, Rational(1, 100)) == 8);
    // eps = 1/4 wipes the whole budget: k - k = 0
    CHECK(long_path_max_ell(20, Rational(1, 4)) == 0);
    CHECK(long_path_max_ell(0, Rational(1, 100)) == 0);
}

TEST_CASE("embedded paths alternate and hit the exact length") {
    const int k = 12;
    auto V1 = range_set(0, k), V2 = range_set(k, 2 * k);
    auto g = complete_cross(2 * k, V1, V2);
    const Rational eps(1, 100);
    int cap = long_path_max_ell(k, eps);
    REQUIRE(cap >= 9);
    for (int ell = 0; ell <= cap; ++ell) {
        LongPathHypotheses hyp;
        auto w = embed_long_path(g, V1, V2, ell, 0, k, eps, &hyp);
        CHECK(w.length() == 2 * ell + 1);
        CHECK(w.vertices.front() == 0);
        CHECK(w.vertices.back() == k);
        CHECK(w.validate(g));
        // endpoints alternate sides throughout
        for (std::size_t i = 0; i < w.vertices.size(); ++i)
            CHECK((w.vertices[i] < k) == (i % 2 == 0));
        CHECK_FALSE(hyp.eps_below_bound);  // 1/100 >= 1/600
        CHECK(hyp.k_at_least_inverse_eps == (k >= 100));
    }
    CHECK_THROWS_AS(embed_long_path(g, V1, V2, cap + 1, 0, k, eps), hypothesis_error);
    CHECK_THROWS_AS(embed_long_path(g, V1, V2, 1, k, 0, eps),
                    std::invalid_argument);  // endpoints on the wrong sides
}

TEST_CASE("embedding survives bounded edge deletion") {
    Rng rng(55);
    const int k = 15;
    const Rational eps(1, 100);
    auto V1 = range_set(0, k), V2 = range_set(k, 2 * k);
    for (int trial = 0; trial < 50; ++trial) {
        auto g = dense_slice(2 * k, V1, V2, eps, rng);
        int cap = long_path_max_ell(k, eps);
        int ell = 1 + static_cast<int>(trial % cap);
        int v_start = V1[trial % k], v_end = V2[(trial * 7) % k];
        auto w = embed_long_path(g, V1, V2, ell, v_start, v_end, eps);
        CHECK(w.length() == 2 * ell + 1);
        CHECK(w.validate(g));
        CHECK(w.vertices.front() == v_start);
        CHECK(w.vertices.back() == v_end);
    }
}

TEST_CASE("blow-up capacity and exact-length cycles on seeded templates") {
    auto inst = make_blowup_instance(2024);
    auto cap = blow_up_capacity(inst.host, inst.pi, inst.rg, inst.m, false, kRed);
    CHECK(cap.min_length >= 4);
    CHECK(cap.max_length > cap.min_length);
    CHECK(cap.min_length % 2 == 0);
    CHECK(cap.max_length % 2 == 0);

    for (int len = cap.min_length; len <= cap.max_length; len += 2) {
        auto w = blow_up_matching_to_cycle(inst.host, inst.pi, inst.rg, inst.m, len, kRed);
        CHECK(w.length() == len);
        CHECK(w.colour == kRed);
        CHECK(w.validate(inst.host));
    }
}

TEST_CASE("capacity violations are typed") {
    auto inst = make_blowup_instance(7);
    auto cap = blow_up_capacity(inst.host, inst.pi, inst.rg, inst.m, false, kRed);
    try {
        blow_up_matching_to_cycle(inst.host, inst.pi, inst.rg, inst.m, cap.max_length + 2, kRed);
        FAIL("expected blowup_error");
    } catch (const blowup_error& e) {
        CHECK(e.kind == BlowupFailure::capacity);
    }
}

TEST_CASE("odd targets detour through an odd reduced cycle") {
    // the all-red K4 template is non-bipartite, so odd lengths embed too
    auto inst = make_blowup_instance(7);
    auto odd_cap = blow_up_capacity(inst.host, inst.pi, inst.rg, inst.m, true, kRed);
    CHECK(odd_cap.min_length % 2 == 1);
    auto w = blow_up_matching_to_cycle(inst.host, inst.pi, inst.rg, inst.m, odd_cap.min_length,
                                       kRed);
    CHECK(w.length() == odd_cap.min_length);
    CHECK(w.validate(inst.host));
}

TEST_CASE("bipartite reduced components refuse odd parity") {
    // same host, but the declared reduced class is a red C4: no odd detour
    auto inst = make_blowup_instance(7);
    ReducedGraph rg = inst.rg;
    MultiColouredGraph c4(4, rg.coloured.colour_count());
    SimpleGraph pairs(4);
    for (auto [a, b] : {std::pair{0, 1}, {1, 2}, {2, 3}, {0, 3}}) {
        c4.add_colour(a, b, kRed);
        pairs.add_edge(a, b);
    }
    rg.coloured = c4;
    rg.regular_pairs = pairs;
    ConnectedMatching m = inst.m;
    m.odd = false;
    try {
        blow_up_matching_to_cycle(inst.host, inst.pi, rg, m, 15, kRed);
        FAIL("expected blowup_error");
    } catch (const blowup_error& e) {
        CHECK(e.kind == BlowupFailure::parity);
    }
    // even lengths still embed through the C4
    auto cap = blow_up_capacity(inst.host, inst.pi, rg, m, false, kRed);
    auto w = blow_up_matching_to_cycle(inst.host, inst.pi, rg, m, cap.min_length, kRed);
    CHECK(w.length() == cap.min_length);
    CHECK(w.validate(inst.host));
}

TEST_CASE("different seeds change the host but not the guarantees") {
    for (std::uint64_t seed : {1ull, 99ull, 31337ull}) {
        auto inst = make_blowup_instance(seed);
        CHECK(inst.host.vertex_count() == 4 * inst.pi.part_size());
        CHECK(inst.pi.part_size() >= 15);
        CHECK(inst.pi.part_size() <= 25);
        auto cap = blow_up_capacity(inst.host, inst.pi, inst.rg, inst.m, false, kRed);
        // a mid-range even length always embeds
        int len = cap.min_length + 2 * ((cap.max_length - cap.min_length) / 4);
        auto w = blow_up_matching_to_cycle(inst.host, inst.pi, inst.rg, inst.m, len, kRed);
        CHECK(w.length() == len);
        CHECK(w.validate(inst.host));
    }
}

}  // TEST_SUITE
