#include "ramsey/hamilton.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace ramsey {

bool PathWitness::validate(const SimpleGraph& host) const {
    const int n = host.vertex_count();
    if (vertices.empty()) return false;
    std::vector<char> seen(n, 0);
    for (int v : vertices) {
        if (v < 0 || v >= n || seen[v]) return false;
        seen[v] = 1;
    }
    for (std::size_t i = 0; i + 1 < vertices.size(); ++i)
        if (!host.has_edge(vertices[i], vertices[i + 1])) return false;
    return true;
}

bool dirac_check(const SimpleGraph& h) {
    const int n = h.vertex_count();
    return n >= 3 && 2 * h.min_degree() >= n;
}

bool chvatal_check(const SimpleGraph& h) {
    const int n = h.vertex_count();
    if (n < 3) return false;
    std::vector<int> d(n);
    for (int v = 0; v < n; ++v) d[v] = h.degree(v);
    std::sort(d.begin(), d.end());
    // d is 0-indexed here; the classical condition speaks of d_1 <= ... <= d_n.
    for (int k = 1; 2 * k <= n; ++k)
        if (d[k - 1] <= k && d[n - k - 1] < n - k) return false;
    return true;
}

bool moon_moser_check(const SimpleGraph& h, const VertexSet& X, const VertexSet& Y) {
    const int n = h.vertex_count();
    VertexSet xs = normalise_vertex_set(X, n);
    VertexSet ys = normalise_vertex_set(Y, n);
    if (!sets_disjoint(xs, ys) || static_cast<int>(xs.size() + ys.size()) != n)
        throw std::invalid_argument("moon_moser_check: X, Y must partition the vertices");
    if (xs.size() != ys.size())
        throw std::invalid_argument("moon_moser_check: bipartition must be balanced");
    std::vector<char> in_x(n, 0);
    for (int v : xs) in_x[v] = 1;
    for (int v = 0; v < n; ++v)
        for (int w : h.neighbours(v))
            if (v < w && in_x[v] == in_x[w])
                throw std::invalid_argument("moon_moser_check: edge inside one side");
    if (n < 4) return false;  // degree condition is vacuous, but no cycle fits
    for (int x : xs)
        for (int y : ys)
            if (!h.has_edge(x, y) && 2 * (h.degree(x) + h.degree(y)) < n + 2) return false;
    return true;
}

bool erdos_gallai_guarantee(const SimpleGraph& h, int m) {
    const int K = h.vertex_count();
    if (m < 3 || m > K) throw std::invalid_argument("erdos_gallai_guarantee: need 3 <= m <= K");
    long long e = 0;
    for (int v = 0; v < K; ++v) e += h.degree(v);
    e /= 2;
    return 2 * e >= static_cast<long long>(m - 1) * (K - 1) + 2;
}

namespace {

struct ClosureResult {
    std::vector<char> adj;                    // matrix of the full closure
    std::vector<std::pair<int, int>> added;   // in addition order
    bool complete = false;
};

// Bondy–Chvátal closure for Hamilton cycles: repeatedly join non-adjacent
// pairs with degree sum >= n. If the closure is complete, a Hamilton cycle
// of the original graph can be rebuilt by unwinding the additions.
ClosureResult hamilton_closure(const SimpleGraph& g) {
    const int n = g.vertex_count();
    ClosureResult res;
    res.adj.assign(static_cast<std::size_t>(n) * n, 0);
    std::vector<int> deg(n, 0);
    for (int v = 0; v < n; ++v) {
        deg[v] = g.degree(v);
        for (int w : g.neighbours(v)) res.adj[static_cast<std::size_t>(v) * n + w] = 1;
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                if (!res.adj[static_cast<std::size_t>(a) * n + b] && deg[a] + deg[b] >= n) {
                    res.adj[static_cast<std::size_t>(a) * n + b] = 1;
                    res.adj[static_cast<std::size_t>(b) * n + a] = 1;
                    ++deg[a];
                    ++deg[b];
                    res.added.emplace_back(a, b);
                    changed = true;
                }
    }
    res.complete = true;
    for (int a = 0; a < n && res.complete; ++a)
        for (int b = a + 1; b < n; ++b)
            if (!res.adj[static_cast<std::size_t>(a) * n + b]) {
                res.complete = false;
                break;
            }
    return res;
}

// Peel the added edges off in reverse order; whenever the current cycle uses
// the removed edge (a, b), the degree-sum condition that justified the
// addition guarantees a crossing pair, and a rotation repairs the cycle.
std::vector<int> unwind_cycle(int n, ClosureResult cl) {
    std::vector<int> cyc(n);
    std::iota(cyc.begin(), cyc.end(), 0);
    auto at = [&](int a, int b) -> char& { return cl.adj[static_cast<std::size_t>(a) * n + b]; };
    for (int k = static_cast<int>(cl.added.size()) - 1; k >= 0; --k) {
        auto [a, b] = cl.added[k];
        at(a, b) = 0;
        at(b, a) = 0;
        int pos = -1;
        for (int i = 0; i < n; ++i) {
            int x = cyc[i], y = cyc[(i + 1) % n];
            if ((x == a && y == b) || (x == b && y == a)) {
                pos = i;
                break;
            }
        }
        if (pos < 0) continue;
        // Path from one end of the removed edge the long way round to the other.
        std::vector<int> p(n);
        for (int i = 0; i < n; ++i) p[i] = cyc[(pos - i + n) % n];
        int cross = -1;
        for (int i = 0; i + 1 < n; ++i)
            if (at(p[0], p[i + 1]) && at(p[n - 1], p[i])) {
                cross = i;
                break;
            }
        if (cross < 0) throw std::logic_error("closure unwind: crossing pair missing");
        std::vector<int> next;
        next.reserve(n);
        for (int i = 0; i <= cross; ++i) next.push_back(p[i]);
        for (int i = n - 1; i > cross; --i) next.push_back(p[i]);
        cyc = std::move(next);
    }
    return cyc;
}

// Exhaustive Hamilton u-v path search, used when no degree condition applies.
struct PathDfs {
    const SimpleGraph& g;
    int target;
    std::uint64_t budget;
    SearchStats stats{0, 0};
    std::vector<char> visited;
    std::vector<int> path;
    bool out_of_budget = false;

    PathDfs(const SimpleGraph& graph, int tgt, std::uint64_t b) : g(graph), target(tgt), budget(b) {
        stats.budget = b;
        visited.assign(g.vertex_count(), 0);
    }

    // Every vertex still to be placed (and the target) must be reachable from
    // the current end through unvisited vertices.
    bool all_reachable(int from) const {
        const int n = g.vertex_count();
        std::vector<char> seen(n, 0);
        std::queue<int> q;
        seen[from] = 1;
        q.push(from);
        int found = 1;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int w : g.neighbours(u))
                if (!seen[w] && !visited[w]) {
                    seen[w] = 1;
                    ++found;
                    q.push(w);
                }
        }
        return found == n - static_cast<int>(path.size()) + 1;  // unvisited + from
    }

    bool dfs(int u) {
        if (stats.expansions >= budget) {
            out_of_budget = true;
            return false;
        }
        ++stats.expansions;
        if (static_cast<int>(path.size()) == g.vertex_count()) return u == target;
        if (!all_reachable(u)) return false;
        for (int w : g.neighbours(u)) {
            if (visited[w]) continue;
            if (w == target && static_cast<int>(path.size()) + 1 < g.vertex_count()) continue;
            visited[w] = 1;
            path.push_back(w);
            if (dfs(w)) return true;
            path.pop_back();
            visited[w] = 0;
        }
        return false;
    }
};

}  // namespace

CycleSearchResult hamiltonian_cycle(const SimpleGraph& h, std::uint64_t budget) {
    const int n = h.vertex_count();
    if (n >= 3) {
        auto cl = hamilton_closure(h);
        if (cl.complete) {
            CycleWitness w;
            w.vertices = unwind_cycle(n, std::move(cl));
            if (!w.validate(h)) throw std::logic_error("closure construction produced a bad cycle");
            return w;
        }
    }
    return find_cycle_exact(h, n, budget);
}

PathSearchResult hamiltonian_path_between(const SimpleGraph& h, int u, int v, std::uint64_t budget) {
    const int n = h.vertex_count();
    if (u < 0 || u >= n || v < 0 || v >= n) throw std::invalid_argument("endpoint out of range");
    if (u == v) throw std::invalid_argument("endpoints must be distinct");
    if (n == 2) {
        if (h.has_edge(u, v)) return PathWitness{{u, v}};
        return AbsenceCertificate{SearchStats{0, budget}};
    }

    // Apex trick: a Hamilton u-v path in h is a Hamilton cycle in h plus one
    // vertex joined to exactly u and v. When h has min degree >= n/2 + 1 the
    // closure of the apex graph is complete, so this branch is guaranteed.
    SimpleGraph g2(n + 1);
    for (int a = 0; a < n; ++a)
        for (int b : h.neighbours(a))
            if (a < b) g2.add_edge(a, b);
    g2.add_edge(n, u);
    g2.add_edge(n, v);
    auto cl = hamilton_closure(g2);
    if (cl.complete) {
        std::vector<int> cyc = unwind_cycle(n + 1, std::move(cl));
        int idx = static_cast<int>(std::find(cyc.begin(), cyc.end(), n) - cyc.begin());
        PathWitness w;
        w.vertices.reserve(n);
        for (int i = 1; i <= n; ++i) w.vertices.push_back(cyc[(idx + i) % (n + 1)]);
        if (w.vertices.front() != u) std::reverse(w.vertices.begin(), w.vertices.end());
        if (w.vertices.front() != u || w.vertices.back() != v || !w.validate(h))
            throw std::logic_error("closure construction produced a bad path");
        return w;
    }

    PathDfs engine(h, v, budget);
    engine.visited[u] = 1;
    engine.path.push_back(u);
    if (engine.dfs(u)) return PathWitness{std::move(engine.path)};
    if (engine.out_of_budget) return BudgetExhausted{engine.stats};
    return AbsenceCertificate{engine.stats};
}

PathWitness bipartite_path_all_of_smaller(const SimpleGraph& h, const VertexSet& X1,
                                          const VertexSet& X2, int x_a, int x_b) {
    const int n = h.vertex_count();
    VertexSet a_side = normalise_vertex_set(X1, n);
    VertexSet b_side = normalise_vertex_set(X2, n);
    if (!sets_disjoint(a_side, b_side) || static_cast<int>(a_side.size() + b_side.size()) != n)
        throw std::invalid_argument("bipartite_path_all_of_smaller: X1, X2 must partition the vertices");
    std::vector<char> in_a(n, 0);
    for (int v : a_side) in_a[v] = 1;
    for (int v = 0; v < n; ++v)
        for (int w : h.neighbours(v))
            if (v < w && in_a[v] == in_a[w])
                throw std::invalid_argument("bipartite_path_all_of_smaller: edge inside one side");
    if (!std::binary_search(a_side.begin(), a_side.end(), x_a) ||
        !std::binary_search(a_side.begin(), a_side.end(), x_b))
        throw std::invalid_argument("bipartite_path_all_of_smaller: endpoints must lie in X1");
    if (x_a == x_b) throw std::invalid_argument("bipartite_path_all_of_smaller: endpoints must differ");

    if (n < 4) throw hypothesis_error("bipartite_path_all_of_smaller: need at least 4 vertices");
    if (a_side.size() <= b_side.size() + 1)
        throw hypothesis_error("bipartite_path_all_of_smaller: need |X1| > |X2| + 1");
    for (int w : b_side)
        if (2 * h.degree(w) < n + 2)
            throw hypothesis_error("bipartite_path_all_of_smaller: X2 degrees must be at least n/2 + 1");
    if (h.degree(x_a) < 1)
        throw hypothesis_error("bipartite_path_all_of_smaller: first endpoint needs a neighbour");
    if (h.degree(x_b) < 2)
        throw hypothesis_error("bipartite_path_all_of_smaller: second endpoint needs degree at least 2");

    // Order X2 so the ends see the path's endpoints, then join consecutive
    // X2-vertices through fresh common neighbours; the degree hypothesis
    // leaves more common neighbours than the path can consume.
    int w_first = h.neighbours(x_a).front();
    int w_last = -1;
    for (int w : h.neighbours(x_b))
        if (w != w_first) {
            w_last = w;
            break;
        }
    if (w_last < 0) throw hypothesis_error("bipartite_path_all_of_smaller: second endpoint needs degree at least 2");
    std::vector<int> order;
    order.push_back(w_first);
    for (int w : b_side)
        if (w != w_first && w != w_last) order.push_back(w);
    order.push_back(w_last);

    std::vector<char> used(n, 0);
    used[x_a] = 1;
    used[x_b] = 1;
    PathWitness witness;
    witness.vertices.push_back(x_a);
    witness.vertices.push_back(w_first);
    for (std::size_t i = 0; i + 1 < order.size(); ++i) {
        int z = -1;
        for (int cand : h.neighbours(order[i]))
            if (!used[cand] && h.has_edge(cand, order[i + 1])) {
                z = cand;
                break;
            }
        if (z < 0) throw std::logic_error("bipartite_path_all_of_smaller: connector pool exhausted");
        used[z] = 1;
        witness.vertices.push_back(z);
        witness.vertices.push_back(order[i + 1]);
    }
    witness.vertices.push_back(x_b);
    if (!witness.validate(h)) throw std::logic_error("bipartite_path_all_of_smaller: invalid path built");
    return witness;
}

}  // namespace ramsey
