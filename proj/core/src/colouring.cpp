#include "ramsey/colouring.hpp"

#include <stdexcept>

namespace ramsey {

std::string colour_name(Colour c) {
    switch (c.index) {
        case 0: return "red";
        case 1: return "blue";
        case 2: return "green";
        default: return "c" + std::to_string(c.index);
    }
}

Colour parse_colour(const std::string& s, int colour_count) {
    int idx = -1;
    if (s == "red") idx = 0;
    else if (s == "blue") idx = 1;
    else if (s == "green") idx = 2;
    else {
        try {
            size_t pos = 0;
            std::string t = s;
            if (!t.empty() && t[0] == 'c') t = t.substr(1);
            idx = std::stoi(t, &pos);
            if (pos != t.size()) idx = -1;
        } catch (const std::exception&) {
            idx = -1;
        }
    }
    if (idx < 0 || idx >= colour_count)
        throw std::invalid_argument("unknown colour '" + s + "'");
    return Colour{idx};
}

EdgeColouring::EdgeColouring(int n, int r) : n_(n), r_(r) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    if (r < 1 || r > kMaxColours) throw std::invalid_argument("colour count out of range");
    colour_.assign(static_cast<std::size_t>(n) * (n - 1) / 2, kUnset);
}

void EdgeColouring::check(int u, int v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_) throw std::out_of_range("vertex out of range");
    if (u == v) throw std::invalid_argument("self-loop");
}

void EdgeColouring::set(int u, int v, Colour c) {
    check(u, v);
    if (c.index < 0 || c.index >= r_) throw std::out_of_range("colour out of range");
    colour_[pair_index(u, v)] = static_cast<std::uint8_t>(c.index);
}

void EdgeColouring::unset(int u, int v) {
    check(u, v);
    colour_[pair_index(u, v)] = kUnset;
}

bool EdgeColouring::is_set(int u, int v) const {
    check(u, v);
    return colour_[pair_index(u, v)] != kUnset;
}

Colour EdgeColouring::colour_of(int u, int v) const {
    check(u, v);
    std::uint8_t c = colour_[pair_index(u, v)];
    if (c == kUnset) throw std::logic_error("edge colour not set");
    return Colour{c};
}

bool EdgeColouring::is_total() const {
    for (auto c : colour_)
        if (c == kUnset) return false;
    return true;
}

std::optional<std::pair<int, int>> EdgeColouring::first_unset() const {
    for (int v = 1; v < n_; ++v)
        for (int u = 0; u < v; ++u)
            if (colour_[pair_index(u, v)] == kUnset) return std::make_pair(u, v);
    return std::nullopt;
}

SimpleGraph EdgeColouring::colour_class(Colour c) const {
    SimpleGraph g(n_);
    for (int v = 1; v < n_; ++v)
        for (int u = 0; u < v; ++u)
            if (colour_[pair_index(u, v)] == c.index) g.add_edge(u, v);
    return g;
}

MultiColouredGraph::MultiColouredGraph(int n, int r) : n_(n), r_(r) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    if (r < 1 || r > kMaxColours) throw std::invalid_argument("colour count out of range");
    mask_.assign(static_cast<std::size_t>(n) * (n - 1) / 2, 0);
}

void MultiColouredGraph::check(int u, int v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_) throw std::out_of_range("vertex out of range");
    if (u == v) throw std::invalid_argument("self-loop");
}

ColourSet MultiColouredGraph::colours_of(int u, int v) const {
    check(u, v);
    return ColourSet(mask_[pair_index(u, v)]);
}

void MultiColouredGraph::set_colours(int u, int v, ColourSet cs) {
    check(u, v);
    if (cs.bits() >> r_) throw std::out_of_range("colour out of range");
    mask_[pair_index(u, v)] = cs.bits();
}

void MultiColouredGraph::add_colour(int u, int v, Colour c) {
    check(u, v);
    if (c.index < 0 || c.index >= r_) throw std::out_of_range("colour out of range");
    mask_[pair_index(u, v)] |= 1u << c.index;
}

std::int64_t MultiColouredGraph::edge_count() const {
    std::int64_t m = 0;
    for (auto b : mask_)
        if (b) ++m;
    return m;
}

SimpleGraph MultiColouredGraph::presence_graph() const {
    SimpleGraph g(n_);
    for (int v = 1; v < n_; ++v)
        for (int u = 0; u < v; ++u)
            if (mask_[pair_index(u, v)]) g.add_edge(u, v);
    return g;
}

SimpleGraph MultiColouredGraph::colour_class(Colour c) const {
    if (c.index < 0 || c.index >= r_) throw std::out_of_range("colour out of range");
    SimpleGraph g(n_);
    for (int v = 1; v < n_; ++v)
        for (int u = 0; u < v; ++u)
            if (mask_[pair_index(u, v)] & (1u << c.index)) g.add_edge(u, v);
    return g;
}

MultiColouredGraph MultiColouredGraph::from(const EdgeColouring& g) {
    MultiColouredGraph m(g.vertex_count(), g.colour_count());
    for (int v = 1; v < g.vertex_count(); ++v)
        for (int u = 0; u < v; ++u)
            if (g.is_set(u, v)) m.add_colour(u, v, g.colour_of(u, v));
    return m;
}

}  // namespace ramsey
