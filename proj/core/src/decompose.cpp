#include "ramsey/decompose.hpp"

#include <algorithm>
#include <stdexcept>

namespace ramsey {

Decomposition decompose_no_odd_matching_in(const SimpleGraph& cls, int m) {
    const int K = cls.vertex_count();
    if (m < 3 || m > K) throw std::invalid_argument("decompose_no_odd_matching: need 3 <= m <= K");
    if (auto best = largest_connected_matching_in(cls, true); best && best->vertex_count() >= m)
        throw decomposition_hypothesis_error(std::move(*best));

    Decomposition d;
    d.m = m;
    ComponentMap cm = components(cls);
    for (int id = 0; id < cm.count(); ++id) {
        auto& target = cm.odd[id] ? d.v_doubleprime : d.v_prime;
        target.insert(target.end(), cm.members[id].begin(), cm.members[id].end());
    }
    std::sort(d.v_prime.begin(), d.v_prime.end());
    std::sort(d.v_doubleprime.begin(), d.v_doubleprime.end());
    if (!verify_decomposition_in(cls, d).all())
        throw std::logic_error("decompose_no_odd_matching: construction failed verification");
    return d;
}

Decomposition decompose_no_odd_matching(const EdgeColouring& g, Colour c, int m) {
    return decompose_no_odd_matching_in(g.colour_class(c), m);
}

Decomposition decompose_no_odd_matching(const MultiColouredGraph& g, Colour c, int m) {
    return decompose_no_odd_matching_in(g.colour_class(c), m);
}

DecompositionReport verify_decomposition_in(const SimpleGraph& cls, const Decomposition& d) {
    const int K = cls.vertex_count();
    VertexSet vp = normalise_vertex_set(d.v_prime, K);
    VertexSet vpp = normalise_vertex_set(d.v_doubleprime, K);
    if (!sets_disjoint(vp, vpp) || static_cast<int>(vp.size() + vpp.size()) != K)
        throw std::invalid_argument("verify_decomposition: V', V'' must partition the vertices");

    std::vector<char> in_pp(K, 0);
    for (int v : vpp) in_pp[v] = 1;

    DecompositionReport rep;

    // (i) G[V'] bipartite.
    {
        SimpleGraph inside(K);
        for (int v : vp)
            for (int w : cls.neighbours(v))
                if (v < w && !in_pp[w]) inside.add_edge(v, w);
        ComponentMap cm = components(inside);
        rep.v_prime_bipartite = !cm.any_odd();
        if (!rep.v_prime_bipartite)
            for (int id = 0; id < cm.count(); ++id)
                if (cm.odd[id]) {
                    rep.odd_cycle_witness = odd_cycle_in_component(inside, cm, id);
                    break;
                }
    }

    // (ii) every component of G[V''] odd; (iii) e(G[V'']) <= m |V''| / 2.
    {
        SimpleGraph inside(K);
        long long edges = 0;
        for (int v : vpp)
            for (int w : cls.neighbours(v))
                if (v < w && in_pp[w]) {
                    inside.add_edge(v, w);
                    ++edges;
                }
        ComponentMap cm = components(inside);
        rep.doubleprime_components_odd = true;
        for (int id = 0; id < cm.count(); ++id) {
            // Components living outside V'' are padding from the fixed
            // vertex numbering; only V''-components matter.
            if (!in_pp[cm.members[id].front()]) continue;
            if (!cm.odd[id]) {
                rep.doubleprime_components_odd = false;
                rep.even_component_witness = cm.members[id];
                break;
            }
        }
        rep.doubleprime_edges = edges;
        rep.edge_bound_value = Rational(d.m) * Rational(static_cast<long>(vpp.size())) / 2;
        rep.edge_bound = Rational(static_cast<long>(edges)) <= rep.edge_bound_value;
    }

    // (iv) no edges between V' and V''.
    rep.no_crossing = true;
    for (int v : vp) {
        for (int w : cls.neighbours(v))
            if (in_pp[w]) {
                rep.no_crossing = false;
                rep.crossing_edge = {v, w};
                break;
            }
        if (!rep.no_crossing) break;
    }
    return rep;
}

DecompositionReport verify_decomposition(const EdgeColouring& g, Colour c, const Decomposition& d) {
    return verify_decomposition_in(g.colour_class(c), d);
}

DecompositionReport verify_decomposition(const MultiColouredGraph& g, Colour c,
                                         const Decomposition& d) {
    return verify_decomposition_in(g.colour_class(c), d);
}

}  // namespace ramsey
