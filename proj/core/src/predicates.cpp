#include "ramsey/predicates.hpp"

#include <stdexcept>

namespace ramsey {

namespace {

void check_density_args(int n, const VertexSet& A, const VertexSet& B) {
    if (A.empty() || B.empty()) throw std::invalid_argument("density: empty side");
    VertexSet a = A, b = B;
    a = normalise_vertex_set(std::move(a), n);
    b = normalise_vertex_set(std::move(b), n);
    if (a.size() != A.size() || b.size() != B.size())
        throw std::invalid_argument("density: duplicate vertices in a side");
    if (!sets_disjoint(a, b)) throw std::invalid_argument("density: sides overlap");
}

std::vector<int> cross_degrees(const SimpleGraph& g, const VertexSet& U, const VertexSet& W) {
    std::vector<char> in_w(g.vertex_count(), 0);
    for (int w : W) in_w[w] = 1;
    std::vector<int> deg;
    deg.reserve(U.size());
    for (int u : U) {
        int d = 0;
        for (int v : g.neighbours(u)) d += in_w[v];
        deg.push_back(d);
    }
    return deg;
}

}  // namespace

std::int64_t cross_edge_count(const SimpleGraph& g, const VertexSet& A, const VertexSet& B) {
    std::int64_t e = 0;
    for (int d : cross_degrees(g, A, B)) e += d;
    return e;
}

Rational density(const SimpleGraph& g, const VertexSet& A, const VertexSet& B) {
    check_density_args(g.vertex_count(), A, B);
    return Rational(cross_edge_count(g, A, B),
                    static_cast<std::int64_t>(A.size()) * static_cast<std::int64_t>(B.size()));
}

Rational density(const EdgeColouring& g, const VertexSet& A, const VertexSet& B, Colour c) {
    return density(g.colour_class(c), A, B);
}

Rational density(const MultiColouredGraph& g, const VertexSet& A, const VertexSet& B, Colour c) {
    return density(g.colour_class(c), A, B);
}

bool is_almost_complete(const SimpleGraph& g, const Rational& a) {
    int n = g.vertex_count();
    for (int u = 0; u < n; ++u)
        if (Rational(g.degree(u)) < Rational(n - 1) - a) return false;
    return true;
}

bool is_complete_fraction(const SimpleGraph& g, const Rational& c) {
    int n = g.vertex_count();
    return is_almost_complete(g, c * (n - 1));
}

bool is_sparse(const SimpleGraph& g, const Rational& c) {
    int n = g.vertex_count();
    for (int u = 0; u < n; ++u)
        if (Rational(g.degree(u)) > c * (n - 1)) return false;
    return true;
}

bool is_almost_complete_bipartite(const SimpleGraph& g, const VertexSet& U,
                                  const VertexSet& W, const Rational& a) {
    for (int d : cross_degrees(g, U, W))
        if (Rational(d) < Rational(static_cast<long long>(W.size())) - a) return false;
    for (int d : cross_degrees(g, W, U))
        if (Rational(d) < Rational(static_cast<long long>(U.size())) - a) return false;
    return true;
}

bool is_complete_fraction_bipartite(const SimpleGraph& g, const VertexSet& U,
                                    const VertexSet& W, const Rational& c) {
    for (int d : cross_degrees(g, U, W))
        if (Rational(d) < (1 - c) * Rational(static_cast<long long>(W.size()))) return false;
    for (int d : cross_degrees(g, W, U))
        if (Rational(d) < (1 - c) * Rational(static_cast<long long>(U.size()))) return false;
    return true;
}

bool is_sparse_bipartite(const SimpleGraph& g, const VertexSet& U,
                         const VertexSet& W, const Rational& c) {
    for (int d : cross_degrees(g, U, W))
        if (Rational(d) > c * Rational(static_cast<long long>(W.size()))) return false;
    for (int d : cross_degrees(g, W, U))
        if (Rational(d) > c * Rational(static_cast<long long>(U.size()))) return false;
    return true;
}

}  // namespace ramsey
