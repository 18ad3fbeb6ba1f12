#include "ramsey/matching.hpp"

#include "ramsey/predicates.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace ramsey {

namespace {

// Classic blossom-contraction augmenting search, O(V^3). Deterministic given
// the sorted adjacency lists.
struct Blossom {
    const SimpleGraph& g;
    int n;
    std::vector<int> match, parent, base;
    std::vector<char> used, in_blossom;

    explicit Blossom(const SimpleGraph& graph)
        : g(graph),
          n(graph.vertex_count()),
          match(n, -1),
          parent(n, -1),
          base(n, 0),
          used(n, 0),
          in_blossom(n, 0) {}

    int lowest_common_base(int a, int b) {
        std::vector<char> seen(n, 0);
        for (;;) {
            a = base[a];
            seen[a] = 1;
            if (match[a] == -1) break;
            a = parent[match[a]];
        }
        for (;;) {
            b = base[b];
            if (seen[b]) return b;
            b = parent[match[b]];
        }
    }

    void mark_path(int v, int stem, int child) {
        while (base[v] != stem) {
            in_blossom[base[v]] = 1;
            in_blossom[base[match[v]]] = 1;
            parent[v] = child;
            child = match[v];
            v = parent[match[v]];
        }
    }

    int find_augmenting(int root) {
        std::fill(used.begin(), used.end(), 0);
        std::fill(parent.begin(), parent.end(), -1);
        std::iota(base.begin(), base.end(), 0);
        used[root] = 1;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int to : g.neighbours(v)) {
                if (base[v] == base[to] || match[v] == to) continue;
                if (to == root || (match[to] != -1 && parent[match[to]] != -1)) {
                    // Edge closes an odd cycle: contract the blossom.
                    int stem = lowest_common_base(v, to);
                    std::fill(in_blossom.begin(), in_blossom.end(), 0);
                    mark_path(v, stem, to);
                    mark_path(to, stem, v);
                    for (int i = 0; i < n; ++i)
                        if (in_blossom[base[i]]) {
                            base[i] = stem;
                            if (!used[i]) {
                                used[i] = 1;
                                q.push(i);
                            }
                        }
                } else if (parent[to] == -1) {
                    parent[to] = v;
                    if (match[to] == -1) return to;  // augmenting path found
                    used[match[to]] = 1;
                    q.push(match[to]);
                }
            }
        }
        return -1;
    }

    void augment(int v) {
        while (v != -1) {
            int pv = parent[v], next = match[pv];
            match[v] = pv;
            match[pv] = v;
            v = next;
        }
    }

    void run() {
        for (int v = 0; v < n; ++v)
            if (match[v] == -1) {
                int leaf = find_augmenting(v);
                if (leaf != -1) augment(leaf);
            }
    }
};

// Group a (globally maximum) matching by component; within each component the
// restriction is a maximum matching of that component.
std::vector<Matching> matching_by_component(const Matching& m, const ComponentMap& cm) {
    std::vector<Matching> per(cm.count());
    for (auto [u, v] : m) per[cm.comp[u]].emplace_back(u, v);
    return per;
}

std::optional<ConnectedMatching> best_component_matching(const SimpleGraph& g, bool require_odd) {
    Blossom engine(g);
    engine.run();
    Matching all;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (engine.match[v] > v) all.emplace_back(v, engine.match[v]);
    ComponentMap cm = components(g);
    auto per = matching_by_component(all, cm);
    int best = -1;
    for (int id = 0; id < cm.count(); ++id) {
        if (require_odd && !cm.odd[id]) continue;
        if (per[id].empty()) continue;
        if (best < 0 || per[id].size() > per[best].size()) best = id;
    }
    if (best < 0) return std::nullopt;
    ConnectedMatching result;
    result.edges = std::move(per[best]);
    std::sort(result.edges.begin(), result.edges.end());
    result.component_id = best;
    result.odd = cm.odd[best];
    return result;
}

// Only the V1-V2 cross edges of h, on the full vertex numbering.
SimpleGraph bipartite_slice(const SimpleGraph& h, const VertexSet& v1, const VertexSet& v2) {
    SimpleGraph slice(h.vertex_count());
    for (int a : v1)
        for (int b : v2)
            if (h.has_edge(a, b)) slice.add_edge(a, b);
    return slice;
}

void check_slice_sets(const SimpleGraph& h, VertexSet& v1, VertexSet& v2) {
    v1 = normalise_vertex_set(v1, h.vertex_count());
    v2 = normalise_vertex_set(v2, h.vertex_count());
    if (v1.empty() || v2.empty()) throw std::invalid_argument("bipartite slice: empty side");
    if (!sets_disjoint(v1, v2)) throw std::invalid_argument("bipartite slice: sides overlap");
}

}  // namespace

Matching max_matching(const SimpleGraph& h) {
    Blossom engine(h);
    engine.run();
    Matching m;
    for (int v = 0; v < h.vertex_count(); ++v)
        if (engine.match[v] > v) m.emplace_back(v, engine.match[v]);
    return m;
}

VertexSet matching_vertex_set(const Matching& m) {
    VertexSet vs;
    vs.reserve(2 * m.size());
    for (auto [u, v] : m) {
        vs.push_back(u);
        vs.push_back(v);
    }
    std::sort(vs.begin(), vs.end());
    return vs;
}

bool is_matching(const SimpleGraph& h, const Matching& m) {
    std::vector<char> seen(h.vertex_count(), 0);
    for (auto [u, v] : m) {
        if (u < 0 || v < 0 || u >= h.vertex_count() || v >= h.vertex_count()) return false;
        if (u == v || !h.has_edge(u, v)) return false;
        if (seen[u] || seen[v]) return false;
        seen[u] = seen[v] = 1;
    }
    return true;
}

bool ConnectedMatching::validate(const SimpleGraph& colour_class) const {
    if (edges.empty()) return false;
    if (!is_matching(colour_class, edges)) return false;
    ComponentMap cm = components(colour_class);
    int id = cm.comp[edges.front().first];
    for (auto [u, v] : edges)
        if (cm.comp[u] != id || cm.comp[v] != id) return false;
    return id == component_id && cm.odd[id] == odd;
}

bool ConnectedMatching::validate(const EdgeColouring& g) const {
    return validate(g.colour_class(colour));
}

bool ConnectedMatching::validate(const MultiColouredGraph& g) const {
    return validate(g.colour_class(colour));
}

std::optional<ConnectedMatching> largest_connected_matching_in(const SimpleGraph& cls,
                                                               bool require_odd) {
    return best_component_matching(cls, require_odd);
}

std::optional<ConnectedMatching> largest_connected_matching(const EdgeColouring& g, Colour c,
                                                            bool require_odd) {
    auto result = best_component_matching(g.colour_class(c), require_odd);
    if (result) result->colour = c;
    return result;
}

std::optional<ConnectedMatching> largest_connected_matching(const MultiColouredGraph& g, Colour c,
                                                            bool require_odd) {
    auto result = best_component_matching(g.colour_class(c), require_odd);
    if (result) result->colour = c;
    return result;
}

Matching almost_complete_bipartite_matching(const SimpleGraph& h, const VertexSet& V1,
                                            const VertexSet& V2, const Rational& a) {
    VertexSet v1 = V1, v2 = V2;
    check_slice_sets(h, v1, v2);
    if (v1.size() < v2.size())
        throw hypothesis_error("almost_complete_bipartite_matching: need |V1| >= |V2|");
    if (a < 0 || 2 * a >= Rational(static_cast<long>(v2.size())))
        throw hypothesis_error("almost_complete_bipartite_matching: need 0 <= a < |V2|/2");
    SimpleGraph slice = bipartite_slice(h, v1, v2);
    for (int x : v1)
        if (Rational(static_cast<long>(v2.size()) - slice.degree(x)) > a)
            throw hypothesis_error("almost_complete_bipartite_matching: V1 degree below |V2| - a");
    for (int y : v2)
        if (Rational(static_cast<long>(v1.size()) - slice.degree(y)) > a)
            throw hypothesis_error("almost_complete_bipartite_matching: V2 degree below |V1| - a");

    // The lemma's augmentation: any unmatched V2-vertex keeps an unmatched
    // neighbour while fewer than |V2| - a edges are placed.
    std::vector<char> used(h.vertex_count(), 0);
    Matching m;
    for (int y : v2) {
        for (int x : slice.neighbours(y))
            if (!used[x]) {
                used[x] = 1;
                used[y] = 1;
                m.emplace_back(std::min(x, y), std::max(x, y));
                break;
            }
    }
    if (Rational(static_cast<long>(m.size())) < Rational(static_cast<long>(v2.size())) - a)
        throw std::logic_error("almost_complete_bipartite_matching: greedy fell short");
    std::sort(m.begin(), m.end());
    return m;
}

ConnectedMatching dense_bipartite_matching(const SimpleGraph& h, const VertexSet& V1,
                                           const VertexSet& V2, const Rational& eps) {
    VertexSet v1 = V1, v2 = V2;
    check_slice_sets(h, v1, v2);
    if (v1.size() < v2.size()) throw hypothesis_error("dense_bipartite_matching: need |V1| >= |V2|");
    if (eps <= 0 || eps >= Rational(1, 100))
        throw hypothesis_error("dense_bipartite_matching: need 0 < eps < 0.01");
    const Rational pairs(static_cast<long>(v1.size()) * static_cast<long>(v2.size()));
    if (Rational(cross_edge_count(h, v1, v2)) < (1 - eps) * pairs)
        throw hypothesis_error("dense_bipartite_matching: too few cross edges");
    SimpleGraph slice = bipartite_slice(h, v1, v2);
    auto best = best_component_matching(slice, false);
    const Rational bound = (1 - 3 * eps) * Rational(static_cast<long>(v2.size()));
    if (!best || Rational(static_cast<long>(best->edges.size())) < bound)
        throw std::logic_error("dense_bipartite_matching: matching below the guaranteed size");
    return *best;
}

std::optional<ConnectedMatching> avg_degree_connected_matching(const SimpleGraph& h, int m) {
    const int K = h.vertex_count();
    if (m < 3 || m > K) throw std::invalid_argument("avg_degree_connected_matching: need 3 <= m <= K");
    long long deg_sum = 0;
    for (int v = 0; v < K; ++v) deg_sum += h.degree(v);
    if (deg_sum < static_cast<long long>(m) * K) return std::nullopt;
    auto best = best_component_matching(h, false);
    if (!best || best->vertex_count() < m)
        throw std::logic_error("avg_degree_connected_matching: matching below the guaranteed size");
    return best;
}

namespace {

// Two-coloured view: only c1/c2 edges count, optionally with the edges inside
// `hole` removed. Returns the largest component over both colour classes.
MonoComponentResult largest_view_component(const EdgeColouring& g, Colour c1, Colour c2,
                                           const VertexSet& hole) {
    const int n = g.vertex_count();
    std::vector<char> in_hole(n, 0);
    for (int v : hole) in_hole[v] = 1;
    MonoComponentResult best;
    for (Colour c : {c1, c2}) {
        SimpleGraph cls(n);
        for (int v = 0; v < n; ++v)
            for (int w = v + 1; w < n; ++w)
                if (g.is_set(v, w) && g.colour_of(v, w) == c && !(in_hole[v] && in_hole[w]))
                    cls.add_edge(v, w);
        ComponentMap cm = components(cls);
        int id = cm.largest();
        if (id >= 0 && (best.members.empty() || cm.members[id].size() > best.members.size())) {
            best.colour = c;
            best.members = cm.members[id];
        }
    }
    return best;
}

void check_two_coloured_view_complete(const EdgeColouring& g, Colour c1, Colour c2,
                                      const Rational& eta, const char* who) {
    const int n = g.vertex_count();
    SimpleGraph view(n);
    for (int v = 0; v < n; ++v)
        for (int w = v + 1; w < n; ++w)
            if (g.is_set(v, w)) {
                Colour c = g.colour_of(v, w);
                if (c == c1 || c == c2) view.add_edge(v, w);
            }
    if (!is_complete_fraction(view, eta))
        throw hypothesis_error(std::string(who) + ": view is not (1-eta)-complete");
}

}  // namespace

MonoComponentResult largest_mono_component(const EdgeColouring& g, Colour c1, Colour c2,
                                           const Rational& eta) {
    const int K = g.vertex_count();
    if (c1 == c2) throw std::invalid_argument("largest_mono_component: colours must differ");
    if (eta <= 0 || 3 * eta >= 1) throw hypothesis_error("largest_mono_component: need 0 < eta < 1/3");
    if (Rational(K) * eta < 1) throw hypothesis_error("largest_mono_component: need K >= 1/eta");
    check_two_coloured_view_complete(g, c1, c2, eta, "largest_mono_component");
    MonoComponentResult best = largest_view_component(g, c1, c2, {});
    if (Rational(K - static_cast<int>(best.members.size())) > 3 * eta * Rational(K))
        throw std::logic_error("largest_mono_component: component below the guaranteed size");
    return best;
}

HoleComponentResult largest_mono_component_with_hole(const EdgeColouring& g, Colour c1, Colour c2,
                                                     const VertexSet& W, const Rational& eta) {
    const int K = g.vertex_count();
    VertexSet hole = normalise_vertex_set(W, K);
    if (c1 == c2) throw std::invalid_argument("largest_mono_component_with_hole: colours must differ");
    if (eta <= 0 || 20 * eta >= 1)
        throw hypothesis_error("largest_mono_component_with_hole: need 0 < eta < 1/20");
    if (Rational(K) * eta < 1) throw hypothesis_error("largest_mono_component_with_hole: need K >= 1/eta");
    const Rational k2 = Rational(K) * Rational(K);
    const long holes = static_cast<long>(hole.size());
    const long rest = K - holes;
    // |W|, |V\W| >= 4*sqrt(eta)K, compared exactly by squaring.
    if (Rational(holes) * holes < 16 * eta * k2 || Rational(rest) * rest < 16 * eta * k2)
        throw hypothesis_error("largest_mono_component_with_hole: hole size bounds violated");
    check_two_coloured_view_complete(g, c1, c2, eta, "largest_mono_component_with_hole");

    HoleComponentResult res;
    MonoComponentResult comp = largest_view_component(g, c1, c2, hole);
    res.colour = comp.colour;
    res.members = std::move(comp.members);
    const Rational gap(K - static_cast<int>(res.members.size()));
    res.big_component = gap * gap <= 4 * eta * k2;

    std::vector<char> in_hole(K, 0);
    for (int v : hole) in_hole[v] = 1;
    for (int w : hole) {
        long cnt1 = 0, cnt2 = 0;
        for (int z = 0; z < K; ++z) {
            if (in_hole[z] || z == w || !g.is_set(w, z)) continue;
            Colour c = g.colour_of(w, z);
            if (c == c1) ++cnt1;
            if (c == c2) ++cnt2;
        }
        const Rational miss1(rest - cnt1), miss2(rest - cnt2);
        if (miss1 * miss1 <= 9 * eta * k2) res.w_r.push_back(w);
        if (miss2 * miss2 <= 9 * eta * k2) res.w_b.push_back(w);
    }
    if (!res.big_component && (res.w_r.empty() || res.w_b.empty()))
        throw std::logic_error("largest_mono_component_with_hole: neither conclusion holds");
    return res;
}

}  // namespace ramsey
