#pragma once

#include <cstdint>
#include <vector>

namespace ramsey {

using VertexSet = std::vector<int>;

// Canonical index of an unordered pair {u,v}, u != v.
inline std::size_t pair_index(int u, int v) {
    if (u > v) { int t = u; u = v; v = t; }
    return static_cast<std::size_t>(v) * (v - 1) / 2 + static_cast<std::size_t>(u);
}

// Simple undirected graph on vertices 0..n-1. Adjacency matrix plus sorted
// adjacency lists; built once, then treated as immutable by the algorithms.
class SimpleGraph {
public:
    SimpleGraph() = default;
    explicit SimpleGraph(int n);

    int vertex_count() const { return n_; }
    std::int64_t edge_count() const { return m_; }
    bool has_edge(int u, int v) const;
    void add_edge(int u, int v);
    void remove_edge(int u, int v);
    int degree(int u) const { return static_cast<int>(adj_[u].size()); }
    int min_degree() const;
    int max_degree() const;
    const std::vector<int>& neighbours(int u) const { return adj_[u]; }

    // Subgraph induced on vs (need not be sorted); vertex i of the result is
    // vs[i] of this graph.
    SimpleGraph induced(const VertexSet& vs) const;

    static SimpleGraph complete(int n);

private:
    void check_vertex(int u) const;
    int n_ = 0;
    std::int64_t m_ = 0;
    std::vector<char> mat_;
    std::vector<std::vector<int>> adj_;
};

// Sorts, deduplicates, and bound-checks a vertex set against n.
VertexSet normalise_vertex_set(VertexSet vs, int n);
bool sets_disjoint(const VertexSet& a, const VertexSet& b);  // requires sorted inputs
VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);

}  // namespace ramsey
