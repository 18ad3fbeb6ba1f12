#include "ramsey/regularity_check.hpp"
#include "ramsey/partition.hpp"
#include "ramsey/predicates.hpp"
#include "ramsey/reduced_graph.hpp"

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

}  // namespace

TEST_SUITE("regularity") {

TEST_CASE("complete and empty slices are regular at any eps") {
    SimpleGraph g(12);
    auto A = range_set(0, 6), B = range_set(6, 12);
    for (int a : A)
        for (int b : B) g.add_edge(a, b);
    auto full = is_eps_regular(g, A, B, Rational(1, 10), RegularityMode::exact);
    CHECK(full.regular);
    CHECK(full.exhaustive);
    SimpleGraph e(12);
    auto empty = is_eps_regular(e, A, B, Rational(1, 10), RegularityMode::exact);
    CHECK(empty.regular);
    CHECK(empty.exhaustive);
}

TEST_CASE("a half-and-half slice is caught with a concrete violation") {
    // B splits into B1 (complete to A) and B2 (empty to A): pair density 1/2,
    // subset (A, B1) has density 1
    SimpleGraph g(12);
    auto A = range_set(0, 6), B = range_set(6, 12);
    for (int a : A)
        for (int b = 6; b < 9; ++b) g.add_edge(a, b);
    auto res = is_eps_regular(g, A, B, Rational(1, 4), RegularityMode::exact);
    CHECK_FALSE(res.regular);
    CHECK(res.exhaustive);
    REQUIRE(res.violation.has_value());
    const auto& viol = *res.violation;
    CHECK(viol.pair_density == Rational(1, 2));
    // the witness subsets genuinely deviate by >= eps
    Rational dev = viol.subset_density - viol.pair_density;
    if (dev < 0) dev = -dev;
    CHECK(dev >= Rational(1, 4));
    // and they satisfy the size floors
    CHECK(Rational(static_cast<long>(viol.a_subset.size())) >=
          Rational(1, 4) * Rational(static_cast<long>(A.size())));
    CHECK(Rational(static_cast<long>(viol.b_subset.size())) >=
          Rational(1, 4) * Rational(static_cast<long>(B.size())));
    // density of the witness matches a recount
    CHECK(density(g, viol.a_subset, viol.b_subset) == viol.subset_density);
}

TEST_CASE("sampled mode never claims exhaustiveness") {
    SimpleGraph g(12);
    auto A = range_set(0, 6), B = range_set(6, 12);
    for (int a : A)
        for (int b = 6; b < 9; ++b) g.add_edge(a, b);
    RegularityOptions opt;
    opt.trials = 4000;
    opt.seed = 7;
    auto res = is_eps_regular(g, A, B, Rational(1, 4), RegularityMode::sampled, opt);
    CHECK_FALSE(res.exhaustive);
    // this violation is easy to sample
    CHECK_FALSE(res.regular);
    REQUIRE(res.violation.has_value());
    CHECK(density(g, res.violation->a_subset, res.violation->b_subset) ==
          res.violation->subset_density);

    // identical seeds, identical outcome
    auto again = is_eps_regular(g, A, B, Rational(1, 4), RegularityMode::sampled, opt);
    CHECK(again.regular == res.regular);
    CHECK(again.pairs_checked == res.pairs_checked);
    CHECK(again.violation->a_subset == res.violation->a_subset);
}

TEST_CASE("exact mode refuses oversized sides") {
    SimpleGraph g(32);
    auto A = range_set(0, 16), B = range_set(16, 32);
    CHECK_THROWS_AS(is_eps_regular(g, A, B, Rational(1, 4), RegularityMode::exact),
                    std::invalid_argument);
    RegularityOptions opt;
    opt.exact_limit = 16;
    CHECK_NOTHROW(is_eps_regular(g, A, B, Rational(1, 4), RegularityMode::exact, opt));
}

TEST_CASE("coloured overloads restrict to one colour class") {
    EdgeColouring g(8, 2);
    auto A = range_set(0, 4), B = range_set(4, 8);
    for (int a : A)
        for (int b : B) g.set(a, b, a % 2 == 0 ? kRed : kBlue);
    for (int u = 0; u < 8; ++u)
        for (int v = u + 1; v < 8; ++v)
            if (!g.is_set(u, v)) g.set(u, v, kRed);
    // red slice rows alternate full/empty: irregular at eps = 1/4
    auto res = is_eps_regular(g, A, B, kRed, Rational(1, 4), RegularityMode::exact);
    CHECK_FALSE(res.regular);
    // at eps = 3/5 the subset floor forces >= 3 rows, where the row split
    // keeps every density within 1/6 of the pair density 1/2
    auto loose = is_eps_regular(g, A, B, kRed, Rational(3, 5), RegularityMode::exact);
    CHECK(loose.regular);
}

TEST_CASE("equitable partitions are valid, reproducible and balanced") {
    auto p = equitable_random_partition(23, 4, 99);
    p.validate_over(23);
    CHECK(p.part_count() == 4);
    CHECK(p.part_size() == 5);
    CHECK(p.v0.size() == 3);
    CHECK(p.vertex_count() == 23);
    auto q = equitable_random_partition(23, 4, 99);
    CHECK(q.parts == p.parts);
    CHECK(q.v0 == p.v0);
    auto r = equitable_random_partition(23, 4, 100);
    CHECK(r.parts != p.parts);  // different seed, different shuffle

    CHECK_THROWS_AS(equitable_random_partition(3, 4, 0), std::invalid_argument);

    Partition bad;
    bad.v0 = {0};
    bad.parts = {{1, 2}, {3}};
    CHECK_THROWS_AS(bad.validate_over(4), std::invalid_argument);  // unequal parts
}

TEST_CASE("reduced graph of a designed host keeps only dense regular pairs") {
    // parts of 10; pair (0,1) complete in red, pair (2,3) complete in blue,
    // pair (0,2) half-half in red (irregular), remaining pairs blue-complete
    const int p = 10, n = 40;
    EdgeColouring g(n, 2);
    auto part = [&](int i) { return range_set(i * p, (i + 1) * p); };
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.set(u, v, kBlue);
    for (int a : part(0))
        for (int b : part(1)) g.set(a, b, kRed);
    for (int a : part(0))
        for (int b = 2 * p; b < 2 * p + p / 2; ++b) g.set(a, b, kRed);

    Partition pi;
    for (int i = 0; i < 4; ++i) pi.parts.push_back(part(i));
    pi.validate_over(n);

    auto rg = build_reduced_graph(g, pi, Rational(1, 4), Rational(1, 2), RegularityMode::exact);
    CHECK(rg.provenance.exhaustive);
    CHECK(rg.coloured.vertex_count() == 4);
    // (0,1): red at density 1
    CHECK(rg.coloured.colours_of(0, 1).is_exactly(kRed));
    // (2,3): blue at density 1
    CHECK(rg.coloured.colours_of(2, 3).is_exactly(kBlue));
    // (0,2): irregular in red, dropped entirely
    CHECK_FALSE(rg.regular_pairs.has_edge(0, 2));
    CHECK(rg.coloured.colours_of(0, 2).empty());
    // (1,2): blue-complete
    CHECK(rg.coloured.colours_of(1, 2).is_exactly(kBlue));
    CHECK(rg.regular_pairs.has_edge(0, 1));
    CHECK(rg.partition.part_size() == p);
}

TEST_CASE("xi filters densities without touching regularity") {
    // cross pairs all red except a perfect matching in blue: red density 7/8.
    // At eps = 2/5 the subset floor is 4, so red subset densities live in
    // [3/4, 1] and blue in [0, 1/4]: the pair is regular in both colours.
    const int p = 8, n = 16;
    EdgeColouring g(n, 2);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.set(u, v, kBlue);
    for (int a = 0; a < p; ++a)
        for (int b = p; b < n; ++b)
            if (b != a + p) g.set(a, b, kRed);
    Partition pi;
    pi.parts = {range_set(0, p), range_set(p, n)};
    auto keep = build_reduced_graph(g, pi, Rational(2, 5), Rational(7, 8), RegularityMode::exact);
    auto drop = build_reduced_graph(g, pi, Rational(2, 5), Rational(9, 10), RegularityMode::exact);
    REQUIRE(keep.regular_pairs.has_edge(0, 1));
    CHECK(keep.coloured.colours_of(0, 1).is_exactly(kRed));  // blue is at 1/8 < 7/8
    REQUIRE(drop.regular_pairs.has_edge(0, 1));
    CHECK(drop.coloured.colours_of(0, 1).empty());  // regular pair, both colours too thin
}

}  // TEST_SUITE
