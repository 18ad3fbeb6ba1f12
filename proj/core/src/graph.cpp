#include "ramsey/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace ramsey {

SimpleGraph::SimpleGraph(int n) : n_(n) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    mat_.assign(static_cast<std::size_t>(n) * n, 0);
    adj_.resize(n);
}

void SimpleGraph::check_vertex(int u) const {
    if (u < 0 || u >= n_) throw std::out_of_range("vertex out of range");
}

bool SimpleGraph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) return false;
    return mat_[static_cast<std::size_t>(u) * n_ + v] != 0;
}

void SimpleGraph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("self-loop");
    auto& cell = mat_[static_cast<std::size_t>(u) * n_ + v];
    if (cell) return;
    cell = 1;
    mat_[static_cast<std::size_t>(v) * n_ + u] = 1;
    adj_[u].insert(std::lower_bound(adj_[u].begin(), adj_[u].end(), v), v);
    adj_[v].insert(std::lower_bound(adj_[v].begin(), adj_[v].end(), u), u);
    ++m_;
}

void SimpleGraph::remove_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    auto& cell = mat_[static_cast<std::size_t>(u) * n_ + v];
    if (!cell) return;
    cell = 0;
    mat_[static_cast<std::size_t>(v) * n_ + u] = 0;
    adj_[u].erase(std::lower_bound(adj_[u].begin(), adj_[u].end(), v));
    adj_[v].erase(std::lower_bound(adj_[v].begin(), adj_[v].end(), u));
    --m_;
}

int SimpleGraph::min_degree() const {
    if (n_ == 0) return 0;
    int d = n_;
    for (const auto& a : adj_) d = std::min<int>(d, static_cast<int>(a.size()));
    return d;
}

int SimpleGraph::max_degree() const {
    int d = 0;
    for (const auto& a : adj_) d = std::max<int>(d, static_cast<int>(a.size()));
    return d;
}

SimpleGraph SimpleGraph::induced(const VertexSet& vs) const {
    std::vector<int> idx(n_, -1);
    for (std::size_t i = 0; i < vs.size(); ++i) {
        check_vertex(vs[i]);
        if (idx[vs[i]] != -1) throw std::invalid_argument("duplicate vertex in induced set");
        idx[vs[i]] = static_cast<int>(i);
    }
    SimpleGraph g(static_cast<int>(vs.size()));
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (int w : adj_[vs[i]])
            if (idx[w] > static_cast<int>(i)) g.add_edge(static_cast<int>(i), idx[w]);
    return g;
}

SimpleGraph SimpleGraph::complete(int n) {
    SimpleGraph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

VertexSet normalise_vertex_set(VertexSet vs, int n) {
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    if (!vs.empty() && (vs.front() < 0 || vs.back() >= n))
        throw std::out_of_range("vertex set out of range");
    return vs;
}

bool sets_disjoint(const VertexSet& a, const VertexSet& b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) return false;
        if (a[i] < b[j]) ++i; else ++j;
    }
    return true;
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

}  // namespace ramsey
