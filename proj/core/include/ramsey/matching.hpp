#pragma once

#include "ramsey/colouring.hpp"
#include "ramsey/components.hpp"
#include "ramsey/rational.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace ramsey {

// Edges as (u, v) with u < v, pairwise vertex-disjoint.
using Matching = std::vector<std::pair<int, int>>;

Matching max_matching(const SimpleGraph& h);
VertexSet matching_vertex_set(const Matching& m);
bool is_matching(const SimpleGraph& h, const Matching& m);

// A matching whose edges all lie in one component of a (colour-class) graph;
// odd records that component's non-bipartiteness.
struct ConnectedMatching {
    Matching edges;
    Colour colour{0};
    int component_id = -1;
    bool odd = false;

    int vertex_count() const { return 2 * static_cast<int>(edges.size()); }
    VertexSet vertex_set() const { return matching_vertex_set(edges); }
    bool validate(const SimpleGraph& colour_class) const;
    bool validate(const EdgeColouring& g) const;
    bool validate(const MultiColouredGraph& g) const;
};

// Per-component maximum matching, maximised over components (odd components
// only when require_odd); nullopt when no eligible component has an edge.
std::optional<ConnectedMatching> largest_connected_matching_in(const SimpleGraph& cls,
                                                               bool require_odd);
std::optional<ConnectedMatching> largest_connected_matching(const EdgeColouring& g, Colour c,
                                                            bool require_odd);
std::optional<ConnectedMatching> largest_connected_matching(const MultiColouredGraph& g, Colour c,
                                                            bool require_odd);

// Greedy augmentation in the bipartite slice h[V1, V2] (only cross edges are
// considered). Hypotheses: |V1| >= |V2| >= 1, 0 <= a, 2a < |V2|, and every
// slice degree misses at most a vertices of the other side. Returns a
// matching of at least |V2| - a edges.
Matching almost_complete_bipartite_matching(const SimpleGraph& h, const VertexSet& V1,
                                            const VertexSet& V2, const Rational& a);

// Dense-slice variant: |V1| >= |V2|, 0 < eps < 0.01 and the slice carries at
// least (1-eps)|V1||V2| edges; returns a connected-matching of at least
// (1-3eps)|V2| edges. component_id/odd refer to the slice graph (always
// bipartite, so odd = false); colour is left for the caller to stamp.
ConnectedMatching dense_bipartite_matching(const SimpleGraph& h, const VertexSet& V1,
                                           const VertexSet& V2, const Rational& eps);

// Average degree >= m forces a connected-matching on >= m vertices
// (3 <= m <= K); nullopt when the average-degree hypothesis fails.
std::optional<ConnectedMatching> avg_degree_connected_matching(const SimpleGraph& h, int m);

struct MonoComponentResult {
    Colour colour{0};
    VertexSet members;
};

// Largest monochromatic component of the two-coloured view of g given by
// colours c1, c2 (other colours count as non-edges). Requires 0 < eta < 1/3,
// K >= 1/eta and the view (1-eta)-complete; the returned component is
// guaranteed to span at least (1-3eta)K vertices.
MonoComponentResult largest_mono_component(const EdgeColouring& g, Colour c1, Colour c2,
                                           const Rational& eta);

struct HoleComponentResult {
    Colour colour{0};
    VertexSet members;      // largest monochromatic component of the holed view
    bool big_component = false;  // it spans at least (1 - 2*sqrt(eta))K vertices
    VertexSet w_r;          // hole vertices nearly complete to the rest in c1
    VertexSet w_b;          // same for c2
};

// One-hole variant: edges inside W are removed from the view before taking
// components. Requires 0 < eta < 1/20, K >= 1/eta, |W|, |V\W| >= 4*sqrt(eta)K
// and the un-holed view (1-eta)-complete. Either the largest component is big
// or both w_r and w_b are non-empty.
HoleComponentResult largest_mono_component_with_hole(const EdgeColouring& g, Colour c1, Colour c2,
                                                     const VertexSet& W, const Rational& eta);

}  // namespace ramsey
