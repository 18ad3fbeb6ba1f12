#include "ramsey/blowup.hpp"

#include "ramsey/predicates.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <stdexcept>

namespace ramsey {

int long_path_max_ell(int k, const Rational& eps) {
    if (k < 2) return 0;
    // Smallest m with m^2 >= 4 eps k^2, i.e. m = ceil(2 sqrt(eps) k), found
    // without ever materialising the square root.
    const Rational target = 4 * eps * Rational(k) * Rational(k);
    int lo = 0, hi = k;
    while (lo < hi) {
        int mid = lo + (hi - lo) / 2;
        if (Rational(mid) * mid >= target) hi = mid;
        else lo = mid + 1;
    }
    if (Rational(lo) * lo < target) return 0;  // eps > 1/4: no legal ell at all
    return std::max(std::min(k - 1, k - lo), 0);
}

namespace {

SimpleGraph cross_slice(const SimpleGraph& g, const VertexSet& v1, const VertexSet& v2) {
    SimpleGraph slice(g.vertex_count());
    for (int a : v1)
        for (int b : v2)
            if (g.has_edge(a, b)) slice.add_edge(a, b);
    return slice;
}

}  // namespace

PathWitness embed_long_path(const SimpleGraph& g, const VertexSet& V1, const VertexSet& V2, int ell,
                            int v_start, int v_end, const Rational& eps,
                            LongPathHypotheses* asymptotic) {
    const int n = g.vertex_count();
    VertexSet v1 = normalise_vertex_set(V1, n);
    VertexSet v2 = normalise_vertex_set(V2, n);
    if (v1.empty() || v2.empty()) throw std::invalid_argument("embed_long_path: empty side");
    if (!sets_disjoint(v1, v2)) throw std::invalid_argument("embed_long_path: sides overlap");
    if (!std::binary_search(v1.begin(), v1.end(), v_start))
        throw std::invalid_argument("embed_long_path: v_start must lie in V1");
    if (!std::binary_search(v2.begin(), v2.end(), v_end))
        throw std::invalid_argument("embed_long_path: v_end must lie in V2");
    if (ell < 0) throw std::invalid_argument("embed_long_path: ell must be non-negative");
    if (eps < 0 || eps >= 1) throw std::invalid_argument("embed_long_path: eps out of [0,1)");

    const int k = static_cast<int>(std::min(v1.size(), v2.size()));
    if (asymptotic) {
        asymptotic->eps_below_bound = 600 * eps < 1;
        asymptotic->k_at_least_inverse_eps = eps * k >= 1;
    }

    SimpleGraph slice = cross_slice(g, v1, v2);
    if (ell == 0) {
        if (!slice.has_edge(v_start, v_end))
            throw embed_error("embed_long_path: ell = 0 but the edge v_start-v_end is absent");
        return PathWitness{{v_start, v_end}};
    }

    long long e = 0;
    for (int v : v1) e += slice.degree(v);
    const Rational pairs = Rational(static_cast<long>(v1.size())) * Rational(static_cast<long>(v2.size()));
    if (Rational(static_cast<long>(e)) * Rational(static_cast<long>(e)) < eps * pairs * pairs)
        throw hypothesis_error("embed_long_path: edge count below sqrt(eps)|V1||V2|");
    if (ell > long_path_max_ell(k, eps))
        throw hypothesis_error("embed_long_path: ell exceeds k - 2 sqrt(eps) k");
    const Rational deg_target = 4 * eps * Rational(k) * Rational(k);  // (3d)^2 >= 4 eps k^2
    auto high_enough = [&](int v) {
        const Rational d3(3LL * slice.degree(v));
        return d3 * d3 >= deg_target;
    };
    if (!high_enough(v_start) || !high_enough(v_end))
        throw hypothesis_error("embed_long_path: endpoint degree below (2/3) sqrt(eps) k");

    std::vector<char> high(n, 0);
    for (int v : v1) high[v] = high_enough(v);
    for (int v : v2) high[v] = high_enough(v);

    // V1 candidates avoiding v_end's neighbourhood go first, keeping the
    // final slot (which must see v_end) as open as possible.
    VertexSet order1 = v1, order2 = v2;
    std::stable_partition(order1.begin(), order1.end(),
                          [&](int v) { return !slice.has_edge(v, v_end); });

    const int total = 2 * ell + 1;  // index of the final position
    std::vector<char> used(n, 0);
    std::vector<int> path{v_start};
    used[v_start] = 1;
    used[v_end] = 1;
    const std::uint64_t budget = 2'000'000;
    std::uint64_t expansions = 0;

    std::function<bool(int, int)> grow = [&](int u, int pos) -> bool {
        if (++expansions > budget)
            throw embed_error("embed_long_path: budget exhausted at position " + std::to_string(pos) +
                              " of " + std::to_string(total));
        const int next = pos + 1;
        if (next == total) {
            if (!slice.has_edge(u, v_end)) return false;
            path.push_back(v_end);
            return true;
        }
        const VertexSet& order = (next % 2 == 0) ? order1 : order2;
        for (int w : order) {
            if (used[w] || !high[w] || !slice.has_edge(u, w)) continue;
            if (next == total - 1 && !slice.has_edge(w, v_end)) continue;
            used[w] = 1;
            path.push_back(w);
            if (grow(w, next)) return true;
            path.pop_back();
            used[w] = 0;
        }
        return false;
    };
    if (!grow(v_start, 0))
        throw embed_error("embed_long_path: dead end (ell " + std::to_string(ell) + ", k " +
                          std::to_string(k) + ", " + std::to_string(expansions) + " expansions)");

    PathWitness w{std::move(path)};
    if (static_cast<int>(w.vertices.size()) != total + 1 || !w.validate(slice) ||
        w.vertices.front() != v_start || w.vertices.back() != v_end)
        throw std::logic_error("embed_long_path: built an invalid path");
    return w;
}

namespace {

struct BlowPlan {
    std::vector<std::pair<int, int>> oriented;  // matching edges as (A_i, B_i) parts
    std::vector<std::vector<int>> walks;        // part walks, walks[j]: B_j .. A_{j+1}
    std::vector<int> inter;                     // per-part intermediate visits
    std::vector<int> usable;                    // per-edge min usable side size k_i
    std::vector<int> cap;                       // per-edge max ell
    int fixed = 0;                              // t + total walk edges
    int min_length = 0;
    int max_length = 0;
    bool feasible = false;
};

std::vector<int> bfs_part_path(const SimpleGraph& R, int from, int to) {
    std::vector<int> prev(R.vertex_count(), -1);
    std::queue<int> q;
    prev[from] = from;
    q.push(from);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        if (u == to) break;
        for (int w : R.neighbours(u))
            if (prev[w] == -1) {
                prev[w] = u;
                q.push(w);
            }
    }
    if (prev[to] == -1)
        throw std::logic_error("blow_up: matching parts not connected in the reduced class");
    std::vector<int> path{to};
    while (path.back() != from) path.push_back(prev[path.back()]);
    std::reverse(path.begin(), path.end());
    return path;
}

BlowPlan make_plan(const ReducedGraph& rg, const ConnectedMatching& M, bool odd_target) {
    SimpleGraph R = rg.coloured.colour_class(M.colour);
    ComponentMap cm = components(R);
    BlowPlan plan;
    for (auto [a, b] : M.edges) plan.oriented.emplace_back(a, b);
    const int t = static_cast<int>(plan.oriented.size());
    for (int j = 0; j < t; ++j)
        plan.walks.push_back(
            bfs_part_path(R, plan.oriented[j].second, plan.oriented[(j + 1) % t].first));

    auto recount = [&] {
        int walk_edges = 0;
        for (const auto& w : plan.walks) walk_edges += static_cast<int>(w.size()) - 1;
        plan.fixed = t + walk_edges;
    };
    recount();

    if ((plan.fixed % 2 != 0) != odd_target) {
        // Detour walk 0 out to an odd cycle of the component, around it and
        // back, flipping the total parity.
        if (!M.odd)
            throw blowup_error(BlowupFailure::parity,
                               "blow_up: target parity unreachable in a bipartite component");
        const int comp = cm.comp[plan.oriented[0].first];
        std::vector<int> cyc = odd_cycle_in_component(R, cm, comp);
        std::vector<int> out = bfs_part_path(R, plan.oriented[0].second, cyc.front());
        std::vector<int> w0 = out;                              // B_0 .. c_0
        w0.insert(w0.end(), cyc.begin() + 1, cyc.end());        // around the cycle
        w0.push_back(cyc.front());                              // .. back to c_0
        for (int i = static_cast<int>(out.size()) - 2; i >= 0; --i) w0.push_back(out[i]);
        const auto& old0 = plan.walks[0];
        w0.insert(w0.end(), old0.begin() + 1, old0.end());
        plan.walks[0] = std::move(w0);
        recount();
    }

    plan.inter.assign(R.vertex_count(), 0);
    for (const auto& w : plan.walks)
        for (std::size_t m = 1; m + 1 < w.size(); ++m) ++plan.inter[w[m]];

    const int p = rg.partition.part_size();
    plan.feasible = true;
    int cap_sum = 0;
    for (auto [a, b] : plan.oriented) {
        int k = std::min(p - plan.inter[a], p - plan.inter[b]);
        plan.usable.push_back(k);
        int cap = k >= 2 ? long_path_max_ell(k, rg.provenance.eps) : 0;
        plan.cap.push_back(cap);
        cap_sum += cap;
        if (cap < 1) plan.feasible = false;
    }
    plan.min_length = plan.fixed + 2 * t;
    plan.max_length = plan.fixed + 2 * cap_sum;
    return plan;
}

void validate_blowup_inputs(const EdgeColouring& g, const Partition& pi, const ReducedGraph& rg,
                            const ConnectedMatching& M, Colour colour) {
    if (M.colour != colour) throw std::invalid_argument("blow_up: matching colour mismatch");
    if (colour.index < 0 || colour.index >= g.colour_count())
        throw std::invalid_argument("blow_up: colour out of range");
    pi.validate_over(g.vertex_count());
    if (pi.parts != rg.partition.parts)
        throw std::invalid_argument("blow_up: partition does not match the reduced graph");
    if (rg.coloured.vertex_count() != pi.part_count())
        throw std::invalid_argument("blow_up: reduced graph size does not match the partition");
    if (!M.validate(rg.coloured))
        throw std::invalid_argument("blow_up: not a valid connected-matching in the reduced graph");
    for (auto [a, b] : M.edges)
        if (density(g, pi.parts[a], pi.parts[b], colour) < rg.provenance.xi)
            throw hypothesis_error("blow_up: matching pair density below xi");
}

std::vector<int> port_candidates(const SimpleGraph& slice, const VertexSet& side, int margin,
                                 int usable_k, const Rational& eps) {
    const Rational thr = 4 * eps * Rational(usable_k) * Rational(usable_k);
    std::vector<int> cand;
    for (int v : side) {
        const long eff = slice.degree(v) - margin;
        if (eff < 1) continue;
        const Rational e3(3 * eff);
        if (e3 * e3 >= thr) cand.push_back(v);
    }
    std::sort(cand.begin(), cand.end(), [&](int x, int y) {
        int dx = slice.degree(x), dy = slice.degree(y);
        return dx != dy ? dx > dy : x < y;
    });
    return cand;
}

bool realize_walk(const SimpleGraph& cls, const std::vector<std::vector<int>>& cands,
                  std::vector<char>& used, std::uint64_t& expansions, std::uint64_t budget,
                  std::vector<int>& out) {
    out.clear();
    std::function<bool(std::size_t)> go = [&](std::size_t pos) -> bool {
        if (pos == cands.size()) return true;
        if (++expansions > budget)
            throw blowup_error(BlowupFailure::embedding, "blow_up: connector budget exhausted");
        for (int v : cands[pos]) {
            if (used[v]) continue;
            if (pos > 0 && !cls.has_edge(out.back(), v)) continue;
            used[v] = 1;
            out.push_back(v);
            if (go(pos + 1)) return true;
            out.pop_back();
            used[v] = 0;
        }
        return false;
    };
    return go(0);
}

}  // namespace

BlowupCapacity blow_up_capacity(const EdgeColouring& g, const Partition& pi, const ReducedGraph& rg,
                                const ConnectedMatching& M, bool odd_target, Colour colour) {
    validate_blowup_inputs(g, pi, rg, M, colour);
    BlowPlan plan = make_plan(rg, M, odd_target);
    if (!plan.feasible) return BlowupCapacity{0, -1};
    return BlowupCapacity{plan.min_length, plan.max_length};
}

CycleWitness blow_up_matching_to_cycle(const EdgeColouring& g, const Partition& pi,
                                       const ReducedGraph& rg, const ConnectedMatching& M,
                                       int target_length, Colour colour) {
    validate_blowup_inputs(g, pi, rg, M, colour);
    if (target_length < 3) throw std::invalid_argument("blow_up: target length must be at least 3");

    BlowPlan plan = make_plan(rg, M, target_length % 2 == 1);
    const int t = static_cast<int>(plan.oriented.size());
    if (!plan.feasible)
        throw blowup_error(BlowupFailure::capacity, "blow_up: a matching pair cannot host any segment");
    if (target_length < plan.min_length || target_length > plan.max_length)
        throw blowup_error(BlowupFailure::capacity,
                           "blow_up: target " + std::to_string(target_length) + " outside [" +
                               std::to_string(plan.min_length) + ", " +
                               std::to_string(plan.max_length) + "]");

    // Balanced segment lengths: start at 1 each, then round-robin up to caps.
    std::vector<int> ell(t, 1);
    int spare = (target_length - plan.fixed) / 2 - t;
    while (spare > 0) {
        bool progress = false;
        for (int i = 0; i < t && spare > 0; ++i)
            if (ell[i] < plan.cap[i]) {
                ++ell[i];
                --spare;
                progress = true;
            }
        if (!progress) throw std::logic_error("blow_up: length distribution failed");
    }

    const SimpleGraph cls = g.colour_class(colour);
    const auto& parts = rg.partition.parts;
    const Rational eps = rg.provenance.eps;

    std::vector<SimpleGraph> pair_slice;
    pair_slice.reserve(t);
    for (auto [a, b] : plan.oriented) pair_slice.push_back(cross_slice(cls, parts[a], parts[b]));

    std::vector<char> used(g.vertex_count(), 0);
    std::uint64_t expansions = 0;
    const std::uint64_t budget = 2'000'000;
    std::vector<std::vector<int>> walk_vertices(t);
    for (int j = 0; j < t; ++j) {
        const auto& walk = plan.walks[j];
        const int next = (j + 1) % t;
        std::vector<std::vector<int>> cands(walk.size());
        cands.front() = port_candidates(pair_slice[j], parts[plan.oriented[j].second],
                                        plan.inter[plan.oriented[j].first], plan.usable[j], eps);
        cands.back() = port_candidates(pair_slice[next], parts[plan.oriented[next].first],
                                       plan.inter[plan.oriented[next].second], plan.usable[next], eps);
        for (std::size_t m = 1; m + 1 < walk.size(); ++m) cands[m] = parts[walk[m]];
        if (cands.front().empty() || cands.back().empty())
            throw blowup_error(BlowupFailure::embedding, "blow_up: no usable port vertex");
        if (!realize_walk(cls, cands, used, expansions, budget, walk_vertices[j]))
            throw blowup_error(BlowupFailure::embedding,
                               "blow_up: no realization for connector " + std::to_string(j));
    }

    std::vector<int> port_a(t), port_b(t);
    for (int j = 0; j < t; ++j) {
        port_b[j] = walk_vertices[j].front();
        port_a[(j + 1) % t] = walk_vertices[j].back();
    }

    std::vector<PathWitness> segments(t);
    for (int i = 0; i < t; ++i) {
        auto [a_part, b_part] = plan.oriented[i];
        VertexSet avail_a, avail_b;
        for (int v : parts[a_part])
            if (!used[v] || v == port_a[i]) avail_a.push_back(v);
        for (int v : parts[b_part])
            if (!used[v] || v == port_b[i]) avail_b.push_back(v);
        try {
            segments[i] = embed_long_path(cls, avail_a, avail_b, ell[i], port_a[i], port_b[i], eps);
        } catch (const hypothesis_error& e) {
            throw blowup_error(BlowupFailure::embedding, std::string("blow_up: ") + e.what());
        } catch (const embed_error& e) {
            throw blowup_error(BlowupFailure::embedding, std::string("blow_up: ") + e.what());
        }
        for (int v : segments[i].vertices) used[v] = 1;
    }

    CycleWitness cw;
    cw.colour = colour;
    for (int j = 0; j < t; ++j) {
        cw.vertices.insert(cw.vertices.end(), segments[j].vertices.begin(),
                           segments[j].vertices.end());
        const auto& wv = walk_vertices[j];
        cw.vertices.insert(cw.vertices.end(), wv.begin() + 1, wv.end() - 1);
    }
    if (static_cast<int>(cw.vertices.size()) != target_length || !cw.validate(g))
        throw std::logic_error("blow_up: assembled cycle failed validation");
    return cw;
}

}  // namespace ramsey
