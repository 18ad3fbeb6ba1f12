#pragma once

#include "ramsey/matching.hpp"

#include <optional>

namespace ramsey {

// Partition of the vertex set splitting a colour class into a bipartite part
// V' and a part V'' whose components are all odd, with few internal edges.
struct Decomposition {
    VertexSet v_prime;
    VertexSet v_doubleprime;
    int m = 0;
};

struct DecompositionReport {
    bool v_prime_bipartite = false;
    bool doubleprime_components_odd = false;
    bool edge_bound = false;   // e(G[V'']) <= m |V''| / 2
    bool no_crossing = false;  // no class edges between V' and V''

    std::optional<std::vector<int>> odd_cycle_witness;  // inside V' when (i) fails
    std::optional<VertexSet> even_component_witness;    // V''-component when (ii) fails
    long long doubleprime_edges = 0;
    Rational edge_bound_value;
    std::optional<std::pair<int, int>> crossing_edge;

    bool all() const {
        return v_prime_bipartite && doubleprime_components_odd && edge_bound && no_crossing;
    }
};

// Raised when some odd component does carry a matching on >= m vertices; the
// offending matching is attached.
struct decomposition_hypothesis_error : hypothesis_error {
    ConnectedMatching counterexample;
    explicit decomposition_hypothesis_error(ConnectedMatching cm)
        : hypothesis_error("decompose_no_odd_matching: an odd component has a matching on >= m vertices"),
          counterexample(std::move(cm)) {}
};

// Splits the class into bipartite components (V') and non-bipartite ones
// (V''), verifying all four conditions before returning. 3 <= m <= K.
Decomposition decompose_no_odd_matching_in(const SimpleGraph& cls, int m);
Decomposition decompose_no_odd_matching(const EdgeColouring& g, Colour c, int m);
Decomposition decompose_no_odd_matching(const MultiColouredGraph& g, Colour c, int m);

DecompositionReport verify_decomposition_in(const SimpleGraph& cls, const Decomposition& d);
DecompositionReport verify_decomposition(const EdgeColouring& g, Colour c, const Decomposition& d);
DecompositionReport verify_decomposition(const MultiColouredGraph& g, Colour c, const Decomposition& d);

}  // namespace ramsey
