#pragma once

#include "ramsey/colour.hpp"
#include "ramsey/graph.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace ramsey {

// Total r-colouring of the edges of K_n (partial while being built).
class EdgeColouring {
public:
    EdgeColouring() = default;
    EdgeColouring(int n, int r);

    int vertex_count() const { return n_; }
    int colour_count() const { return r_; }

    void set(int u, int v, Colour c);
    void unset(int u, int v);
    bool is_set(int u, int v) const;
    Colour colour_of(int u, int v) const;  // throws if unset

    bool is_total() const;
    std::optional<std::pair<int, int>> first_unset() const;

    // Spanning subgraph formed by the edges of one colour.
    SimpleGraph colour_class(Colour c) const;

private:
    void check(int u, int v) const;
    static constexpr std::uint8_t kUnset = 0xff;
    int n_ = 0, r_ = 0;
    std::vector<std::uint8_t> colour_;
};

// Graph in which an edge may carry several colours (e.g. a reduced graph).
// Absent edge <=> empty colour set.
class MultiColouredGraph {
public:
    MultiColouredGraph() = default;
    MultiColouredGraph(int n, int r);

    int vertex_count() const { return n_; }
    int colour_count() const { return r_; }

    bool has_edge(int u, int v) const { return !colours_of(u, v).empty(); }
    ColourSet colours_of(int u, int v) const;
    void set_colours(int u, int v, ColourSet cs);
    void add_colour(int u, int v, Colour c);

    std::int64_t edge_count() const;
    SimpleGraph presence_graph() const;
    SimpleGraph colour_class(Colour c) const;

    static MultiColouredGraph from(const EdgeColouring& g);

private:
    void check(int u, int v) const;
    int n_ = 0, r_ = 0;
    std::vector<std::uint32_t> mask_;
};

}  // namespace ramsey
