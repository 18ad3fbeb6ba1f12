#include "ramsey/cycle_search.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <stdexcept>

namespace ramsey {

namespace {

bool validate_cycle_edges(const std::vector<int>& vs,
                          const std::function<bool(int, int)>& has_edge, int n) {
    if (vs.size() < 3) return false;
    std::vector<char> seen(n, 0);
    for (int v : vs) {
        if (v < 0 || v >= n || seen[v]) return false;
        seen[v] = 1;
    }
    for (std::size_t i = 0; i < vs.size(); ++i)
        if (!has_edge(vs[i], vs[(i + 1) % vs.size()])) return false;
    return true;
}

}  // namespace

bool CycleWitness::validate(const SimpleGraph& host) const {
    return validate_cycle_edges(
        vertices, [&](int u, int v) { return host.has_edge(u, v); }, host.vertex_count());
}

bool CycleWitness::validate(const EdgeColouring& host) const {
    return validate_cycle_edges(
        vertices,
        [&](int u, int v) { return host.is_set(u, v) && host.colour_of(u, v) == colour; },
        host.vertex_count());
}

bool CycleWitness::validate(const MultiColouredGraph& host) const {
    return validate_cycle_edges(
        vertices, [&](int u, int v) { return host.colours_of(u, v).contains(colour); },
        host.vertex_count());
}

bool found(const CycleSearchResult& r) {
    return std::holds_alternative<CycleWitness>(r);
}

bool exhausted_absence(const CycleSearchResult& r) {
    return std::holds_alternative<AbsenceCertificate>(r);
}

SearchStats stats_of(const CycleSearchResult& r) {
    if (auto* a = std::get_if<AbsenceCertificate>(&r)) return a->stats;
    if (auto* b = std::get_if<BudgetExhausted>(&r)) return b->stats;
    return SearchStats{};
}

namespace {

// Iteratively strip vertices of degree < 2; returns the alive mask.
std::vector<char> two_core(const SimpleGraph& g) {
    int n = g.vertex_count();
    std::vector<char> alive(n, 1);
    std::vector<int> deg(n);
    std::deque<int> q;
    for (int v = 0; v < n; ++v) {
        deg[v] = g.degree(v);
        if (deg[v] < 2) { alive[v] = 0; q.push_back(v); }
    }
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        for (int w : g.neighbours(v))
            if (alive[w] && --deg[w] < 2) { alive[w] = 0; q.push_back(w); }
    }
    return alive;
}

struct CycleDfs {
    const SimpleGraph& g;
    int target_min;              // minimum acceptable length
    int target_max;              // maximum acceptable length (== min for exact)
    std::uint64_t budget;
    SearchStats stats;
    std::vector<char> alive;     // 2-core, shrunk per anchor
    std::vector<char> on_path;
    std::vector<int> path;
    std::vector<int> dist;       // BFS distance to the anchor within alive&(>anchor) set
    bool bipartite_comp = false;
    bool out_of_budget = false;

    CycleDfs(const SimpleGraph& graph, int lo, int hi, std::uint64_t b)
        : g(graph), target_min(lo), target_max(hi), budget(b) {
        stats.budget = b;
        alive = two_core(g);
        on_path.assign(g.vertex_count(), 0);
        dist.assign(g.vertex_count(), -1);
    }

    // BFS from anchor over alive vertices (anchor's component only).
    void compute_dist(int anchor) {
        std::fill(dist.begin(), dist.end(), -1);
        std::deque<int> q{anchor};
        dist[anchor] = 0;
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            for (int v : g.neighbours(u))
                if (alive[v] && dist[v] == -1) {
                    dist[v] = dist[u] + 1;
                    q.push_back(v);
                }
        }
    }

    bool dfs(int u, int anchor) {
        if (stats.expansions >= budget) { out_of_budget = true; return false; }
        ++stats.expansions;
        int len = static_cast<int>(path.size());
        for (int v : g.neighbours(u)) {
            if (v == anchor && len >= target_min && len <= target_max) return true;
            if (!alive[v] || on_path[v] || v <= anchor) continue;
            if (len + 1 > target_max) continue;
            if (dist[v] < 0 || len + dist[v] > target_max) continue;  // can't close in time
            // path to v carries len edges and any completion matches dist[v]'s
            // parity, so in a bipartite component len + dist[v] must be even
            if (bipartite_comp && ((len + dist[v]) & 1) != 0) continue;
            on_path[v] = 1;
            path.push_back(v);
            if (dfs(v, anchor)) return true;
            path.pop_back();
            on_path[v] = 0;
        }
        return false;
    }
};

CycleSearchResult search(const SimpleGraph& g, int lo, int hi, std::uint64_t budget) {
    int n = g.vertex_count();
    if (lo < 3 || lo > hi) throw std::invalid_argument("cycle length out of range");

    CycleDfs engine(g, lo, hi, budget);

    // components over the 2-core only
    SimpleGraph core(n);
    for (int u = 0; u < n; ++u)
        if (engine.alive[u])
            for (int v : g.neighbours(u))
                if (v > u && engine.alive[v]) core.add_edge(u, v);
    ComponentMap cm = components(core);

    std::vector<int> side0(cm.count(), 0);
    for (int v = 0; v < n; ++v)
        if (engine.alive[v] && cm.side[v] == 0) ++side0[cm.comp[v]];

    for (int anchor = 0; anchor < n; ++anchor) {
        if (!engine.alive[anchor]) continue;
        int comp = cm.comp[anchor];
        int comp_size = static_cast<int>(cm.members[comp].size());
        if (comp_size < lo) continue;
        engine.bipartite_comp = !cm.odd[comp];
        if (engine.bipartite_comp) {
            if (lo == hi && lo % 2 != 0) continue;  // odd target, even component
            int max_even = 2 * std::min(side0[comp], comp_size - side0[comp]);
            if (lo > max_even) continue;
        }

        engine.compute_dist(anchor);
        engine.path.assign(1, anchor);
        engine.on_path[anchor] = 1;
        bool hit = engine.dfs(anchor, anchor);
        engine.on_path[anchor] = 0;
        if (hit) {
            CycleWitness w{engine.path, Colour{0}};
            return w;
        }
        if (engine.out_of_budget) return BudgetExhausted{engine.stats};
        // cycles through `anchor` fully explored; drop it for later anchors
        engine.alive[anchor] = 0;
    }
    return AbsenceCertificate{engine.stats};
}

}  // namespace

CycleSearchResult find_cycle_exact(const SimpleGraph& g, int L, std::uint64_t budget) {
    if (L < 3 || L > g.vertex_count()) throw std::invalid_argument("cycle length out of range");
    return search(g, L, L, budget);
}

CycleSearchResult find_cycle_exact(const EdgeColouring& g, Colour c, int L, std::uint64_t budget) {
    auto r = find_cycle_exact(g.colour_class(c), L, budget);
    if (auto* w = std::get_if<CycleWitness>(&r)) w->colour = c;
    return r;
}

CycleSearchResult find_cycle_exact(const MultiColouredGraph& g, Colour c, int L,
                                   std::uint64_t budget) {
    auto r = find_cycle_exact(g.colour_class(c), L, budget);
    if (auto* w = std::get_if<CycleWitness>(&r)) w->colour = c;
    return r;
}

CycleSearchResult find_long_cycle(const SimpleGraph& g, int min_len, std::uint64_t budget) {
    if (min_len < 3 || min_len > g.vertex_count())
        throw std::invalid_argument("cycle length out of range");
    return search(g, min_len, g.vertex_count(), budget);
}

ComponentMap has_odd_cycle(const SimpleGraph& g) {
    return components(g);
}

ComponentMap has_odd_cycle(const EdgeColouring& g, Colour c) {
    return components(g.colour_class(c));
}

ComponentMap has_odd_cycle(const MultiColouredGraph& g, Colour c) {
    return components(g.colour_class(c));
}

}  // namespace ramsey
