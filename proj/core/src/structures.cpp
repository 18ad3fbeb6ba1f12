#include "ramsey/structures.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

namespace ramsey {

bool StructureReport::all() const {
    for (const auto& c : conditions)
        if (!c.ok) return false;
    return true;
}

const ConditionReport& StructureReport::at(std::string_view name) const {
    for (const auto& c : conditions)
        if (c.name == name) return c;
    throw std::out_of_range("no condition named " + std::string(name));
}

namespace {

void check_colour(Colour c, int r, const char* who) {
    if (c.index < 0 || c.index >= r)
        throw std::invalid_argument(std::string(who) + ": colour out of range");
}

int colour_deg_in(const MultiColouredGraph& g, Colour c, int v, const VertexSet& others) {
    int d = 0;
    for (int u : others)
        if (u != v && g.colours_of(u, v).contains(c)) ++d;
    return d;
}

int view_deg_in(const MultiColouredGraph& g, ColourSet view, int v, const VertexSet& others) {
    int d = 0;
    for (int u : others)
        if (u != v && !g.colours_of(u, v).intersect(view).empty()) ++d;
    return d;
}

ConditionReport sizes_condition(std::initializer_list<std::pair<const VertexSet*, int>> reqs) {
    ConditionReport c{"sizes"};
    for (auto [set, min] : reqs)
        if (static_cast<int>(set->size()) < min) {
            c.ok = false;
            break;
        }
    return c;
}

ConditionReport almost_complete_condition(const MultiColouredGraph& g, ColourSet view,
                                          const VertexSet& all, const Rational& budget) {
    ConditionReport c{"almost_complete"};
    const Rational need = Rational(static_cast<long>(all.size())) - 1 - budget;
    for (int v : all)
        if (Rational(view_deg_in(g, view, v, all)) < need) {
            c.ok = false;
            c.vertex = v;
            break;
        }
    return c;
}

// Appends to `cond` the first edge inside `members` whose view-restricted
// colour set is present but not exactly {gamma}.
void check_exclusive_within(const MultiColouredGraph& g, ColourSet view, const VertexSet& members,
                            Colour gamma, ConditionReport& cond) {
    if (!cond.ok) return;
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j) {
            ColourSet m = g.colours_of(members[i], members[j]).intersect(view);
            if (!m.empty() && !m.is_exactly(gamma)) {
                cond.ok = false;
                cond.edge = {members[i], members[j]};
                return;
            }
        }
}

void check_exclusive_between(const MultiColouredGraph& g, ColourSet view, const VertexSet& a,
                             const VertexSet& b, Colour gamma, ConditionReport& cond) {
    if (!cond.ok) return;
    for (int u : a)
        for (int v : b) {
            ColourSet m = g.colours_of(u, v).intersect(view);
            if (!m.empty() && !m.is_exactly(gamma)) {
                cond.ok = false;
                cond.edge = {u, v};
                return;
            }
        }
}

void check_subset_between(const MultiColouredGraph& g, ColourSet view, const VertexSet& a,
                          const VertexSet& b, ColourSet allowed, ConditionReport& cond) {
    if (!cond.ok) return;
    for (int u : a)
        for (int v : b) {
            ColourSet m = g.colours_of(u, v).intersect(view);
            if (!m.empty() && !m.subset_of(allowed)) {
                cond.ok = false;
                cond.edge = {u, v};
                return;
            }
        }
}

}  // namespace

StructureReport verify_h(const MultiColouredGraph& g, const HWitness& w) {
    const int n = g.vertex_count();
    VertexSet x1 = normalise_vertex_set(w.x1, n);
    VertexSet x2 = normalise_vertex_set(w.x2, n);
    if (!sets_disjoint(x1, x2)) throw std::invalid_argument("verify_h: parts overlap");
    if (w.x1_min < 1 || w.x2_min < 1) throw std::invalid_argument("verify_h: minima must be positive");
    if (w.c1 < 0) throw std::invalid_argument("verify_h: c1 must be non-negative");
    if (w.c2 < 0 || w.c2 > 1) throw std::invalid_argument("verify_h: c2 must lie in [0,1]");
    check_colour(w.gamma1, g.colour_count(), "verify_h");
    check_colour(w.gamma2, g.colour_count(), "verify_h");
    if (w.gamma1 == w.gamma2) throw std::invalid_argument("verify_h: colours must differ");

    ColourSet view;
    view.insert(w.gamma1);
    view.insert(w.gamma2);
    const VertexSet all = set_union(x1, x2);

    StructureReport rep;
    rep.conditions.push_back(sizes_condition({{&x1, w.x1_min}, {&x2, w.x2_min}}));
    rep.conditions.push_back(almost_complete_condition(g, view, all, w.c1));

    {
        ConditionReport c{"iii_a_complete"};
        const Rational need = (1 - w.c2) * (Rational(static_cast<long>(x1.size())) - 1);
        for (int v : x1)
            if (Rational(colour_deg_in(g, w.gamma1, v, x1)) < need) {
                c.ok = false;
                c.vertex = v;
                break;
            }
        rep.conditions.push_back(c);
    }
    {
        ConditionReport c{"iii_a_sparse"};
        const Rational cap = w.c2 * (Rational(static_cast<long>(x1.size())) - 1);
        for (int v : x1)
            if (Rational(colour_deg_in(g, w.gamma2, v, x1)) > cap) {
                c.ok = false;
                c.vertex = v;
                break;
            }
        rep.conditions.push_back(c);
    }
    {
        ConditionReport c{"iii_b_complete"};
        const Rational need1 = (1 - w.c2) * Rational(static_cast<long>(x2.size()));
        const Rational need2 = (1 - w.c2) * Rational(static_cast<long>(x1.size()));
        for (int v : x1)
            if (Rational(colour_deg_in(g, w.gamma2, v, x2)) < need1) {
                c.ok = false;
                c.vertex = v;
                break;
            }
        if (c.ok)
            for (int v : x2)
                if (Rational(colour_deg_in(g, w.gamma2, v, x1)) < need2) {
                    c.ok = false;
                    c.vertex = v;
                    break;
                }
        rep.conditions.push_back(c);
    }
    {
        ConditionReport c{"iii_b_sparse"};
        const Rational cap1 = w.c2 * Rational(static_cast<long>(x2.size()));
        const Rational cap2 = w.c2 * Rational(static_cast<long>(x1.size()));
        for (int v : x1)
            if (Rational(colour_deg_in(g, w.gamma1, v, x2)) > cap1) {
                c.ok = false;
                c.vertex = v;
                break;
            }
        if (c.ok)
            for (int v : x2)
                if (Rational(colour_deg_in(g, w.gamma1, v, x1)) > cap2) {
                    c.ok = false;
                    c.vertex = v;
                    break;
                }
        rep.conditions.push_back(c);
    }
    return rep;
}

StructureReport verify_j(const MultiColouredGraph& g, const JWitness& w) {
    const int n = g.vertex_count();
    VertexSet x1 = normalise_vertex_set(w.x1, n);
    VertexSet x2 = normalise_vertex_set(w.x2, n);
    if (!sets_disjoint(x1, x2)) throw std::invalid_argument("verify_j: parts overlap");
    if (w.x_min < 1) throw std::invalid_argument("verify_j: minimum must be positive");
    if (w.c < 0) throw std::invalid_argument("verify_j: c must be non-negative");
    check_colour(w.gamma1, g.colour_count(), "verify_j");
    check_colour(w.gamma2, g.colour_count(), "verify_j");
    if (w.gamma1 == w.gamma2) throw std::invalid_argument("verify_j: colours must differ");

    ColourSet view;
    view.insert(w.gamma1);
    view.insert(w.gamma2);
    const VertexSet all = set_union(x1, x2);

    StructureReport rep;
    rep.conditions.push_back(sizes_condition({{&x1, w.x_min}, {&x2, w.x_min}}));
    rep.conditions.push_back(almost_complete_condition(g, view, all, w.c));
    {
        ConditionReport c{"iii_a"};
        check_exclusive_within(g, view, x1, w.gamma1, c);
        check_exclusive_within(g, view, x2, w.gamma1, c);
        rep.conditions.push_back(c);
    }
    {
        ConditionReport c{"iii_b"};
        check_exclusive_between(g, view, x1, x2, w.gamma2, c);
        rep.conditions.push_back(c);
    }
    return rep;
}

StructureReport verify_l(const MultiColouredGraph& g, const LWitness& w) {
    const int n = g.vertex_count();
    VertexSet x1 = normalise_vertex_set(w.x1, n);
    VertexSet x2 = normalise_vertex_set(w.x2, n);
    VertexSet y1 = normalise_vertex_set(w.y1, n);
    VertexSet y2 = normalise_vertex_set(w.y2, n);
    const VertexSet* parts[4] = {&x1, &x2, &y1, &y2};
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (!sets_disjoint(*parts[i], *parts[j]))
                throw std::invalid_argument("verify_l: parts overlap");
    if (w.x_min < 1) throw std::invalid_argument("verify_l: minimum must be positive");
    if (w.c < 0) throw std::invalid_argument("verify_l: c must be non-negative");
    check_colour(w.gamma1, g.colour_count(), "verify_l");
    check_colour(w.gamma2, g.colour_count(), "verify_l");
    check_colour(w.gamma3, g.colour_count(), "verify_l");
    if (w.gamma1 == w.gamma2 || w.gamma1 == w.gamma3 || w.gamma2 == w.gamma3)
        throw std::invalid_argument("verify_l: colours must differ");

    ColourSet view;
    view.insert(w.gamma1);
    view.insert(w.gamma2);
    view.insert(w.gamma3);
    const VertexSet all = set_union(set_union(x1, x2), set_union(y1, y2));

    StructureReport rep;
    rep.conditions.push_back(
        sizes_condition({{&x1, w.x_min}, {&x2, w.x_min}, {&y1, w.x_min}, {&y2, w.x_min}}));
    rep.conditions.push_back(almost_complete_condition(g, view, all, w.c));
    {
        ConditionReport c{"iii_a"};
        for (const VertexSet* p : parts) check_exclusive_within(g, view, *p, w.gamma1, c);
        rep.conditions.push_back(c);
    }
    {
        ConditionReport c{"iii_b"};
        check_exclusive_between(g, view, x1, y1, w.gamma2, c);
        check_exclusive_between(g, view, x2, y2, w.gamma2, c);
        rep.conditions.push_back(c);
    }
    {
        ConditionReport c{"iii_c"};
        check_exclusive_between(g, view, x1, x2, w.gamma3, c);
        check_exclusive_between(g, view, y1, y2, w.gamma3, c);
        rep.conditions.push_back(c);
    }
    {
        ConditionReport c{"iii_d"};
        ColourSet allowed;
        allowed.insert(w.gamma2);
        allowed.insert(w.gamma3);
        check_subset_between(g, view, x1, y2, allowed, c);
        check_subset_between(g, view, x2, y1, allowed, c);
        rep.conditions.push_back(c);
    }
    return rep;
}

StructureReport verify_h(const EdgeColouring& g, const HWitness& w) {
    return verify_h(MultiColouredGraph::from(g), w);
}
StructureReport verify_j(const EdgeColouring& g, const JWitness& w) {
    return verify_j(MultiColouredGraph::from(g), w);
}
StructureReport verify_l(const EdgeColouring& g, const LWitness& w) {
    return verify_l(MultiColouredGraph::from(g), w);
}

MultiColouredGraph induced_multi(const MultiColouredGraph& g, const VertexSet& vs) {
    VertexSet s = normalise_vertex_set(vs, g.vertex_count());
    MultiColouredGraph out(static_cast<int>(s.size()), g.colour_count());
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j) {
            ColourSet cs = g.colours_of(s[i], s[j]);
            if (!cs.empty()) out.set_colours(static_cast<int>(i), static_cast<int>(j), cs);
        }
    return out;
}

namespace {

// Per-part-pair edge rule used by the partition DFS. exact != 0 requires the
// view-restricted colour set to equal it; otherwise the set must be a subset
// of `subset`.
struct Rule {
    std::uint32_t exact = 0;
    std::uint32_t subset = 0xffffffffu;
};

std::vector<std::vector<int>> colour_degrees(const MultiColouredGraph& g) {
    const int n = g.vertex_count(), r = g.colour_count();
    std::vector<std::vector<int>> sig(n, std::vector<int>(r, 0));
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            ColourSet cs = g.colours_of(u, v);
            for (int c = 0; c < r; ++c)
                if (cs.contains(Colour{c})) {
                    ++sig[u][c];
                    ++sig[v][c];
                }
        }
    return sig;
}

// Vertices grouped by identical per-colour degree vector, groups ordered by
// their smallest member.
std::vector<VertexSet> signature_groups(const MultiColouredGraph& g) {
    auto sig = colour_degrees(g);
    std::map<std::vector<int>, VertexSet> by;
    for (int v = 0; v < g.vertex_count(); ++v) by[sig[v]].push_back(v);
    std::vector<VertexSet> groups;
    groups.reserve(by.size());
    for (auto& [key, vs] : by) groups.push_back(vs);
    std::sort(groups.begin(), groups.end(),
              [](const VertexSet& a, const VertexSet& b) { return a.front() < b.front(); });
    return groups;
}

struct AssignSearch {
    const MultiColouredGraph& g;
    int nparts;
    std::vector<int> minima;
    std::vector<std::vector<Rule>> rule;  // empty => no per-edge constraints
    ColourSet view;
    bool pin_first = false;
    std::uint64_t budget = 0;
    std::function<bool(const std::vector<int>&)> accept;

    std::vector<int> order, assign, count;
    std::vector<std::vector<std::uint32_t>> vmask;
    std::uint64_t tried = 0;
    bool out_of_budget = false;

    bool run() {
        const int n = g.vertex_count();
        assign.assign(n, -1);
        count.assign(nparts, 0);
        vmask.assign(n, std::vector<std::uint32_t>(n, 0));
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) {
                std::uint32_t m = g.colours_of(u, v).intersect(view).bits();
                vmask[u][v] = vmask[v][u] = m;
            }
        return dfs(0);
    }

    bool dfs(std::size_t idx) {
        if (idx == order.size()) return accept(assign);
        if (++tried > budget) {
            out_of_budget = true;
            return false;
        }
        const int v = order[idx];
        const int remaining = static_cast<int>(order.size() - idx) - 1;
        const int limit = (idx == 0 && pin_first) ? 1 : nparts;
        for (int p = 0; p < limit; ++p) {
            bool ok = true;
            if (!rule.empty())
                for (std::size_t j = 0; j < idx && ok; ++j) {
                    const int u = order[j];
                    const std::uint32_t m = vmask[u][v];
                    if (!m) continue;
                    const Rule& r = rule[p][assign[u]];
                    ok = r.exact ? m == r.exact : (m & ~r.subset) == 0;
                }
            if (!ok) continue;
            assign[v] = p;
            ++count[p];
            int deficit = 0;
            for (int q = 0; q < nparts; ++q) deficit += std::max(0, minima[q] - count[q]);
            if (deficit <= remaining && dfs(idx + 1)) return true;
            --count[p];
            assign[v] = -1;
            if (out_of_budget) return false;
        }
        return false;
    }
};

std::vector<VertexSet> parts_of(const std::vector<int>& assign, int nparts) {
    std::vector<VertexSet> parts(nparts);
    for (int v = 0; v < static_cast<int>(assign.size()); ++v)
        if (assign[v] >= 0) parts[assign[v]].push_back(v);
    return parts;
}

// Tries wholesale group->part assignments; returns the accepted assignment.
std::optional<std::vector<int>> seeded_pass(const MultiColouredGraph& g,
                                            const std::vector<VertexSet>& groups, int nparts,
                                            const std::vector<int>& minima, bool pin_first,
                                            std::uint64_t budget, std::uint64_t& tried,
                                            const std::function<bool(const std::vector<int>&)>& accept) {
    const std::size_t t = groups.size();
    if (t < static_cast<std::size_t>(nparts) || t > 8) return std::nullopt;
    // group containing vertex 0 comes first (sorted by smallest member), so
    // pinning fixes its digit to part 0
    std::vector<int> digit(t, 0);
    std::vector<int> assign(g.vertex_count(), -1);
    const std::size_t first_free = pin_first ? 1 : 0;
    while (true) {
        if (++tried > budget) return std::nullopt;
        std::vector<int> count(nparts, 0);
        for (std::size_t i = 0; i < t; ++i) count[digit[i]] += static_cast<int>(groups[i].size());
        bool sized = true;
        for (int p = 0; p < nparts; ++p) sized = sized && count[p] >= minima[p];
        if (sized) {
            for (std::size_t i = 0; i < t; ++i)
                for (int v : groups[i]) assign[v] = digit[i];
            if (accept(assign)) return assign;
        }
        std::size_t pos = first_free;
        while (pos < t && digit[pos] == nparts - 1) digit[pos++] = 0;
        if (pos >= t) return std::nullopt;
        ++digit[pos];
    }
}

std::vector<int> grouped_order(const std::vector<VertexSet>& groups) {
    std::vector<int> order;
    for (const auto& grp : groups) order.insert(order.end(), grp.begin(), grp.end());
    return order;
}

void check_search_colours(const MultiColouredGraph& g, std::initializer_list<Colour> cs,
                          const char* who) {
    std::uint32_t seen = 0;
    for (Colour c : cs) {
        check_colour(c, g.colour_count(), who);
        if (seen & (1u << c.index))
            throw std::invalid_argument(std::string(who) + ": colours must differ");
        seen |= 1u << c.index;
    }
}

}  // namespace

HSearchResult search_h(const MultiColouredGraph& g, int x1_min, int x2_min, const Rational& c1,
                       const Rational& c2, Colour gamma1, Colour gamma2, std::uint64_t budget) {
    if (x1_min < 1 || x2_min < 1) throw std::invalid_argument("search_h: minima must be positive");
    if (c1 < 0) throw std::invalid_argument("search_h: c1 must be non-negative");
    if (c2 < 0 || c2 > 1) throw std::invalid_argument("search_h: c2 must lie in [0,1]");
    check_search_colours(g, {gamma1, gamma2}, "search_h");

    HSearchResult res;
    const int n = g.vertex_count();
    if (n < x1_min + x2_min) {
        res.status = SearchStatus::none_exhausted;
        return res;
    }
    ColourSet view;
    view.insert(gamma1);
    view.insert(gamma2);
    VertexSet all(n);
    std::iota(all.begin(), all.end(), 0);
    if (!almost_complete_condition(g, view, all, c1).ok) {
        res.status = SearchStatus::none_exhausted;  // partition-independent condition
        return res;
    }

    auto make = [&](const std::vector<int>& assign) {
        auto parts = parts_of(assign, 2);
        HWitness w;
        w.x1 = std::move(parts[0]);
        w.x2 = std::move(parts[1]);
        w.x1_min = x1_min;
        w.x2_min = x2_min;
        w.c1 = c1;
        w.c2 = c2;
        w.gamma1 = gamma1;
        w.gamma2 = gamma2;
        return w;
    };
    auto accept = [&](const std::vector<int>& assign) { return verify_h(g, make(assign)).all(); };

    auto groups = signature_groups(g);
    if (auto hit = seeded_pass(g, groups, 2, {x1_min, x2_min}, false, budget, res.tried, accept)) {
        res.status = SearchStatus::found;
        res.witness = make(*hit);
        return res;
    }
    if (res.tried >= budget) {
        res.status = SearchStatus::inconclusive;
        return res;
    }

    AssignSearch s{g, 2, {x1_min, x2_min}, {}, view};
    s.budget = budget - res.tried;
    s.accept = accept;
    s.order = grouped_order(groups);
    const bool found = s.run();
    res.tried += s.tried;
    if (found) {
        res.status = SearchStatus::found;
        res.witness = make(s.assign);
    } else {
        res.status = s.out_of_budget ? SearchStatus::inconclusive : SearchStatus::none_exhausted;
    }
    return res;
}

JSearchResult search_j(const MultiColouredGraph& g, int x_min, const Rational& c, Colour gamma1,
                       Colour gamma2, std::uint64_t budget) {
    if (x_min < 1) throw std::invalid_argument("search_j: minimum must be positive");
    if (c < 0) throw std::invalid_argument("search_j: c must be non-negative");
    check_search_colours(g, {gamma1, gamma2}, "search_j");

    JSearchResult res;
    const int n = g.vertex_count();
    if (n < 2 * x_min) {
        res.status = SearchStatus::none_exhausted;
        return res;
    }
    ColourSet view;
    view.insert(gamma1);
    view.insert(gamma2);
    VertexSet all(n);
    std::iota(all.begin(), all.end(), 0);
    if (!almost_complete_condition(g, view, all, c).ok) {
        res.status = SearchStatus::none_exhausted;
        return res;
    }

    auto make = [&](const std::vector<int>& assign) {
        auto parts = parts_of(assign, 2);
        JWitness w;
        w.x1 = std::move(parts[0]);
        w.x2 = std::move(parts[1]);
        w.x_min = x_min;
        w.c = c;
        w.gamma1 = gamma1;
        w.gamma2 = gamma2;
        return w;
    };
    auto accept = [&](const std::vector<int>& assign) { return verify_j(g, make(assign)).all(); };

    auto groups = signature_groups(g);
    if (auto hit = seeded_pass(g, groups, 2, {x_min, x_min}, true, budget, res.tried, accept)) {
        res.status = SearchStatus::found;
        res.witness = make(*hit);
        return res;
    }
    if (res.tried >= budget) {
        res.status = SearchStatus::inconclusive;
        return res;
    }

    const std::uint32_t b1 = ColourSet::single(gamma1).bits();
    const std::uint32_t b2 = ColourSet::single(gamma2).bits();
    std::vector<std::vector<Rule>> rule(2, std::vector<Rule>(2));
    rule[0][0] = rule[1][1] = Rule{b1, 0};
    rule[0][1] = rule[1][0] = Rule{b2, 0};

    AssignSearch s{g, 2, {x_min, x_min}, std::move(rule), view};
    s.pin_first = true;  // X1 <-> X2 relabelling is a symmetry of the class
    s.budget = budget - res.tried;
    s.accept = accept;
    s.order = grouped_order(groups);
    const bool found = s.run();
    res.tried += s.tried;
    if (found) {
        res.status = SearchStatus::found;
        res.witness = make(s.assign);
    } else {
        res.status = s.out_of_budget ? SearchStatus::inconclusive : SearchStatus::none_exhausted;
    }
    return res;
}

LSearchResult search_l(const MultiColouredGraph& g, int x_min, const Rational& c, Colour gamma1,
                       Colour gamma2, Colour gamma3, std::uint64_t budget) {
    if (x_min < 1) throw std::invalid_argument("search_l: minimum must be positive");
    if (c < 0) throw std::invalid_argument("search_l: c must be non-negative");
    check_search_colours(g, {gamma1, gamma2, gamma3}, "search_l");

    LSearchResult res;
    const int n = g.vertex_count();
    if (n < 4 * x_min) {
        res.status = SearchStatus::none_exhausted;
        return res;
    }
    ColourSet view;
    view.insert(gamma1);
    view.insert(gamma2);
    view.insert(gamma3);
    VertexSet all(n);
    std::iota(all.begin(), all.end(), 0);
    if (!almost_complete_condition(g, view, all, c).ok) {
        res.status = SearchStatus::none_exhausted;
        return res;
    }

    auto make = [&](const std::vector<int>& assign) {
        auto parts = parts_of(assign, 4);
        LWitness w;
        w.x1 = std::move(parts[0]);
        w.x2 = std::move(parts[1]);
        w.y1 = std::move(parts[2]);
        w.y2 = std::move(parts[3]);
        w.x_min = x_min;
        w.c = c;
        w.gamma1 = gamma1;
        w.gamma2 = gamma2;
        w.gamma3 = gamma3;
        return w;
    };
    auto accept = [&](const std::vector<int>& assign) { return verify_l(g, make(assign)).all(); };

    auto groups = signature_groups(g);
    if (auto hit =
            seeded_pass(g, groups, 4, {x_min, x_min, x_min, x_min}, true, budget, res.tried, accept)) {
        res.status = SearchStatus::found;
        res.witness = make(*hit);
        return res;
    }
    if (res.tried >= budget) {
        res.status = SearchStatus::inconclusive;
        return res;
    }

    const std::uint32_t b1 = ColourSet::single(gamma1).bits();
    const std::uint32_t b2 = ColourSet::single(gamma2).bits();
    const std::uint32_t b3 = ColourSet::single(gamma3).bits();
    // parts: 0 = X1, 1 = X2, 2 = Y1, 3 = Y2
    std::vector<std::vector<Rule>> rule(4, std::vector<Rule>(4));
    for (int p = 0; p < 4; ++p) rule[p][p] = Rule{b1, 0};
    rule[0][2] = rule[2][0] = rule[1][3] = rule[3][1] = Rule{b2, 0};
    rule[0][1] = rule[1][0] = rule[2][3] = rule[3][2] = Rule{b3, 0};
    rule[0][3] = rule[3][0] = rule[1][2] = rule[2][1] = Rule{0, b2 | b3};

    AssignSearch s{g, 4, {x_min, x_min, x_min, x_min}, std::move(rule), view};
    s.pin_first = true;  // the Klein relabelling group acts transitively on parts
    s.budget = budget - res.tried;
    s.accept = accept;
    s.order = grouped_order(groups);
    const bool found = s.run();
    res.tried += s.tried;
    if (found) {
        res.status = SearchStatus::found;
        res.witness = make(s.assign);
    } else {
        res.status = s.out_of_budget ? SearchStatus::inconclusive : SearchStatus::none_exhausted;
    }
    return res;
}

}  // namespace ramsey
