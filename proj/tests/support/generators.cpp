#include "support/generators.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace testsupport {

using namespace ramsey;

SimpleGraph random_graph(int n, double p, Rng& rng) {
    SimpleGraph g(n);
    std::bernoulli_distribution coin(p);
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

EdgeColouring random_colouring(int n, int r, Rng& rng) {
    EdgeColouring g(n, r);
    std::uniform_int_distribution<int> pick(0, r - 1);
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) g.set(u, v, Colour{pick(rng)});
    return g;
}

SimpleGraph random_bipartite(int half, double p, Rng& rng) {
    SimpleGraph g(2 * half);
    std::bernoulli_distribution coin(p);
    for (int u = 0; u < half; ++u)
        for (int v = half; v < 2 * half; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

SimpleGraph almost_complete_slice(int n, const VertexSet& v1, const VertexSet& v2, int a,
                                  Rng& rng) {
    SimpleGraph g(n);
    for (int u : v1)
        for (int w : v2) g.add_edge(u, w);
    if (a <= 0) return g;

    std::vector<int> missing(static_cast<std::size_t>(n), 0);
    std::vector<std::pair<int, int>> pool;
    for (int u : v1)
        for (int w : v2) pool.emplace_back(u, w);
    std::shuffle(pool.begin(), pool.end(), rng);
    // Delete greedily while both endpoints stay within the budget; roughly
    // half the pool is offered so some vertices reach the bound exactly.
    std::size_t offers = pool.size() / 2;
    for (std::size_t i = 0; i < offers; ++i) {
        auto [u, w] = pool[i];
        if (missing[static_cast<std::size_t>(u)] < a && missing[static_cast<std::size_t>(w)] < a) {
            g.remove_edge(u, w);
            ++missing[static_cast<std::size_t>(u)];
            ++missing[static_cast<std::size_t>(w)];
        }
    }
    return g;
}

SimpleGraph dense_slice(int n, const VertexSet& v1, const VertexSet& v2, const Rational& eps,
                        Rng& rng) {
    SimpleGraph g(n);
    std::vector<std::pair<int, int>> pool;
    for (int u : v1)
        for (int w : v2) {
            g.add_edge(u, w);
            pool.emplace_back(u, w);
        }
    const Rational budget = eps * static_cast<long long>(v1.size()) *
                            static_cast<long long>(v2.size());
    long long removable = to_ll(floor_rational(budget));
    if (removable > 0 && budget == Rational(removable)) --removable;  // keep strictly above
    std::shuffle(pool.begin(), pool.end(), rng);
    for (long long i = 0; i < removable && i < static_cast<long long>(pool.size()); ++i)
        g.remove_edge(pool[static_cast<std::size_t>(i)].first,
                      pool[static_cast<std::size_t>(i)].second);
    return g;
}

namespace {

// Edge mask canonical form: minimum over all vertex permutations.
std::uint32_t graph_mask(const SimpleGraph& g) {
    std::uint32_t m = 0;
    int bit = 0;
    for (int v = 1; v < g.vertex_count(); ++v)
        for (int u = 0; u < v; ++u, ++bit)
            if (g.has_edge(u, v)) m |= (1u << bit);
    return m;
}

std::uint32_t permuted_mask(std::uint32_t mask, int n, const std::array<int, 8>& perm,
                            const std::array<std::array<int, 8>, 8>& bit_of) {
    std::uint32_t out = 0;
    int bit = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u, ++bit)
            if (mask & (1u << bit)) {
                int a = perm[static_cast<std::size_t>(u)], b = perm[static_cast<std::size_t>(v)];
                out |= (1u << bit_of[static_cast<std::size_t>(std::min(a, b))]
                                    [static_cast<std::size_t>(std::max(a, b))]);
            }
    return out;
}

std::uint32_t canonical_mask(std::uint32_t mask, int n) {
    std::array<std::array<int, 8>, 8> bit_of{};
    int bit = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u, ++bit) bit_of[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = bit;
    std::array<int, 8> perm{};
    std::iota(perm.begin(), perm.begin() + n, 0);
    std::uint32_t best = mask;
    do {
        best = std::min(best, permuted_mask(mask, n, perm, bit_of));
    } while (std::next_permutation(perm.begin(), perm.begin() + n));
    return best;
}

SimpleGraph graph_from_mask(std::uint32_t mask, int n) {
    SimpleGraph g(n);
    int bit = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u, ++bit)
            if (mask & (1u << bit)) g.add_edge(u, v);
    return g;
}

}  // namespace

std::vector<SimpleGraph> all_graphs_up_to_iso(int n) {
    if (n < 1 || n > 7) throw std::invalid_argument("iso enumeration supports 1..7 vertices");
    std::vector<SimpleGraph> out;
    std::vector<std::uint32_t> level{0u};  // K_1
    out.push_back(SimpleGraph(1));
    for (int k = 2; k <= n; ++k) {
        std::unordered_set<std::uint32_t> seen;
        std::vector<std::uint32_t> next;
        const int base_bits = (k - 1) * (k - 2) / 2;
        for (std::uint32_t g : level) {
            for (std::uint32_t nb = 0; nb < (1u << (k - 1)); ++nb) {
                // new vertex k-1 adjacent to the set nb of old vertices
                std::uint32_t mask = g;
                for (int u = 0; u < k - 1; ++u)
                    if (nb & (1u << u)) mask |= (1u << (base_bits + u));
                std::uint32_t canon = canonical_mask(mask, k);
                if (seen.insert(canon).second) next.push_back(canon);
            }
        }
        std::sort(next.begin(), next.end());
        for (std::uint32_t m : next) out.push_back(graph_from_mask(m, k));
        level = std::move(next);
    }
    return out;
}

// ---- planted structures -------------------------------------------------

namespace {

VertexSet iota_set(int from, int count) {
    VertexSet v(static_cast<std::size_t>(count));
    std::iota(v.begin(), v.end(), from);
    return v;
}

void fill_within(MultiColouredGraph& g, const VertexSet& part, Colour c) {
    for (std::size_t i = 0; i < part.size(); ++i)
        for (std::size_t j = i + 1; j < part.size(); ++j) g.add_colour(part[i], part[j], c);
}

void fill_between(MultiColouredGraph& g, const VertexSet& a, const VertexSet& b, Colour c) {
    for (int u : a)
        for (int v : b) g.add_colour(u, v, c);
}

}  // namespace

PlantedH plant_h(Rng& rng) {
    std::uniform_int_distribution<int> s1(5, 8), s2(2, 4);
    const int x1 = s1(rng), x2 = s2(rng);
    PlantedH p;
    p.g = MultiColouredGraph(x1 + x2, 3);
    p.w.x1 = iota_set(0, x1);
    p.w.x2 = iota_set(x1, x2);
    p.w.x1_min = x1;
    p.w.x2_min = x2;
    p.w.c1 = Rational(1);
    p.w.c2 = Rational(1, 4);
    p.w.gamma1 = kRed;
    p.w.gamma2 = kGreen;
    fill_within(p.g, p.w.x1, kRed);
    fill_between(p.g, p.w.x1, p.w.x2, kGreen);
    // X2 interior is unconstrained, but the view only keeps class colours, so
    // use those to preserve the almost-complete degree bound.
    std::bernoulli_distribution which(0.5);
    for (std::size_t i = 0; i < p.w.x2.size(); ++i)
        for (std::size_t j = i + 1; j < p.w.x2.size(); ++j)
            p.g.add_colour(p.w.x2[i], p.w.x2[j], which(rng) ? kRed : kGreen);
    // Bounded noise: one gamma2 edge inside X1 (degree 1 <= c2*(x1-1)) and a
    // second colour on one cross edge (sparseness counts gamma1 only).
    if (x1 >= 5) p.g.add_colour(p.w.x1[0], p.w.x1[1], kGreen);
    p.g.add_colour(p.w.x1[0], p.w.x2[0], kBlue);
    return p;
}

PlantedJ plant_j(Rng& rng) {
    std::uniform_int_distribution<int> s(3, 6);
    const int x1 = s(rng), x2 = s(rng);
    PlantedJ p;
    p.g = MultiColouredGraph(x1 + x2, 3);
    p.w.x1 = iota_set(0, x1);
    p.w.x2 = iota_set(x1, x2);
    p.w.x_min = std::min(x1, x2);
    p.w.c = Rational(1);
    p.w.gamma1 = kRed;
    p.w.gamma2 = kBlue;
    fill_within(p.g, p.w.x1, kRed);
    fill_within(p.g, p.w.x2, kRed);
    fill_between(p.g, p.w.x1, p.w.x2, kBlue);
    // Delete a small matching: each endpoint misses one vertex, within c = 1.
    if (x1 >= 2 && x2 >= 2) p.g.set_colours(p.w.x1[0], p.w.x2[0], ColourSet{});
    return p;
}

PlantedL plant_l(Rng& rng, int max_n) {
    const int cap = std::max(4, max_n / 4);
    std::uniform_int_distribution<int> s(2, cap);
    std::array<int, 4> sz{s(rng), s(rng), s(rng), s(rng)};
    PlantedL p;
    const int n = sz[0] + sz[1] + sz[2] + sz[3];
    p.g = MultiColouredGraph(n, 3);
    int at = 0;
    p.w.x1 = iota_set(at, sz[0]); at += sz[0];
    p.w.x2 = iota_set(at, sz[1]); at += sz[1];
    p.w.y1 = iota_set(at, sz[2]); at += sz[2];
    p.w.y2 = iota_set(at, sz[3]);
    p.w.x_min = std::min({sz[0], sz[1], sz[2], sz[3]});
    p.w.c = Rational(1);
    p.w.gamma1 = kRed;
    p.w.gamma2 = kBlue;
    p.w.gamma3 = kGreen;
    for (const auto* part : {&p.w.x1, &p.w.x2, &p.w.y1, &p.w.y2}) fill_within(p.g, *part, kRed);
    fill_between(p.g, p.w.x1, p.w.y1, kBlue);
    fill_between(p.g, p.w.x2, p.w.y2, kBlue);
    fill_between(p.g, p.w.x1, p.w.x2, kGreen);
    fill_between(p.g, p.w.y1, p.w.y2, kGreen);
    // The mixed slices may carry either of gamma2, gamma3.
    std::bernoulli_distribution coin(0.5);
    for (int u : p.w.x1)
        for (int v : p.w.y2) p.g.add_colour(u, v, coin(rng) ? kBlue : kGreen);
    for (int u : p.w.x2)
        for (int v : p.w.y1) p.g.add_colour(u, v, coin(rng) ? kBlue : kGreen);
    return p;
}

// ---- blow-up templates ----------------------------------------------------

BlowupInstance make_blowup_instance(std::uint64_t seed) {
    Rng rng(seed);
    std::uniform_int_distribution<int> size_pick(15, 25);
    const int p = size_pick(rng);
    const int n = 4 * p;

    BlowupInstance inst;
    inst.host = EdgeColouring(n, 2);
    inst.pi.parts.resize(4);
    for (int i = 0; i < 4; ++i) inst.pi.parts[static_cast<std::size_t>(i)] = iota_set(i * p, p);

    std::uniform_real_distribution<double> dens(0.6, 0.85);
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) inst.host.set(u, v, kBlue);
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b) {
            const double d = dens(rng);
            std::bernoulli_distribution coin(d);
            std::vector<std::pair<int, int>> missing;
            long long placed = 0;
            for (int u : inst.pi.parts[static_cast<std::size_t>(a)])
                for (int v : inst.pi.parts[static_cast<std::size_t>(b)]) {
                    if (coin(rng)) {
                        inst.host.set(u, v, kRed);
                        ++placed;
                    } else {
                        missing.emplace_back(u, v);
                    }
                }
            // Top up to guarantee density >= 3/5 deterministically.
            const long long want = (3LL * p * p + 4) / 5;
            std::shuffle(missing.begin(), missing.end(), rng);
            for (std::size_t i = 0; placed < want && i < missing.size(); ++i, ++placed)
                inst.host.set(missing[i].first, missing[i].second, kRed);
        }

    inst.rg.coloured = MultiColouredGraph(4, 2);
    inst.rg.regular_pairs = SimpleGraph(4);
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b) {
            inst.rg.coloured.add_colour(a, b, kRed);
            inst.rg.regular_pairs.add_edge(a, b);
        }
    inst.rg.partition = inst.pi;
    inst.rg.provenance.eps = Rational(1, 100);
    inst.rg.provenance.xi = Rational(1, 2);
    inst.rg.provenance.mode = RegularityMode::exact;
    inst.rg.provenance.exhaustive = true;
    inst.rg.provenance.seed = seed;
    inst.rg.provenance.source = "template";

    inst.m.edges = {{0, 1}, {2, 3}};
    inst.m.colour = kRed;
    inst.m.component_id = 0;
    inst.m.odd = true;  // K_4 contains triangles
    return inst;
}

}  // namespace testsupport
