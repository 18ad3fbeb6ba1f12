#pragma once

#include "ramsey/colouring.hpp"
#include "ramsey/graph.hpp"
#include "ramsey/rational.hpp"

namespace ramsey {

// Number of edges with one endpoint in A, the other in B (A, B disjoint).
std::int64_t cross_edge_count(const SimpleGraph& g, const VertexSet& A, const VertexSet& B);

// d(A,B) = e(A,B) / (|A||B|). A and B must be disjoint and non-empty.
Rational density(const SimpleGraph& g, const VertexSet& A, const VertexSet& B);
Rational density(const EdgeColouring& g, const VertexSet& A, const VertexSet& B, Colour c);
Rational density(const MultiColouredGraph& g, const VertexSet& A, const VertexSet& B, Colour c);

// Every vertex misses at most `a` of the other N-1 vertices.
bool is_almost_complete(const SimpleGraph& g, const Rational& a);
// Minimum degree at least (1-c)(N-1).
bool is_complete_fraction(const SimpleGraph& g, const Rational& c);
// Maximum degree at most c(N-1).
bool is_sparse(const SimpleGraph& g, const Rational& c);

// Bipartite variants look only at cross-edges between U and W: degrees inside
// a side are ignored, thresholds use the opposite side's size.
bool is_almost_complete_bipartite(const SimpleGraph& g, const VertexSet& U,
                                  const VertexSet& W, const Rational& a);
bool is_complete_fraction_bipartite(const SimpleGraph& g, const VertexSet& U,
                                    const VertexSet& W, const Rational& c);
bool is_sparse_bipartite(const SimpleGraph& g, const VertexSet& U,
                         const VertexSet& W, const Rational& c);

}  // namespace ramsey
