#include "ramsey/constructions.hpp"

#include "ramsey/rational.hpp"

#include <numeric>
#include <stdexcept>

namespace ramsey {

void CycleTargets::validate() const {
    if (targets.empty()) throw std::invalid_argument("no cycle targets");
    for (const auto& t : targets)
        if (t.length < 3) throw std::invalid_argument("cycle target below 3");
}

namespace {

void require_even(int x, const char* name) {
    if (x < 4 || x % 2 != 0)
        throw hypothesis_error(std::string(name) + " must be even and >= 4");
}

void require_odd(int x, const char* name) {
    if (x < 5 || x % 2 == 0)
        throw hypothesis_error(std::string(name) + " must be odd and >= 5");
}

std::vector<VertexSet> consecutive_classes(const std::vector<int>& sizes) {
    std::vector<VertexSet> cls;
    int v = 0;
    for (int s : sizes) {
        VertexSet vs(s);
        std::iota(vs.begin(), vs.end(), v);
        v += s;
        cls.push_back(std::move(vs));
    }
    return cls;
}

void colour_within(EdgeColouring& g, const VertexSet& a, Colour c) {
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j) g.set(a[i], a[j], c);
}

void colour_between(EdgeColouring& g, const VertexSet& a, const VertexSet& b, Colour c) {
    for (int u : a)
        for (int v : b) g.set(u, v, c);
}

// Shared skeleton of constructions 2 and 3: `inner` is the colour inside V1,V2
// and `outer` the colour of the big bipartition. V3/V4 interiors take
// `interior_default` unless the hook overrides (restricted to {red, interior_default_alt}).
EdgeColouring eoo_23(int n, int ml, Colour inner, Colour outer,
                     const std::optional<InteriorColouring>& interior) {
    require_even(n, "n");
    require_odd(ml, inner == kBlue ? "m" : "l");
    int big = ml - 1, small = n / 2 - 1;
    auto cls = consecutive_classes({big, big, small, small});
    EdgeColouring g(2 * big + 2 * small, 3);

    colour_between(g, cls[0], cls[2], kRed);
    colour_between(g, cls[1], cls[3], kRed);
    colour_within(g, cls[0], inner);
    colour_within(g, cls[1], inner);
    colour_between(g, set_union(cls[0], cls[2]), set_union(cls[1], cls[3]), outer);

    // V3, V4 interiors: red by default; hook may pick red or `inner` per edge
    for (int part = 2; part <= 3; ++part) {
        const VertexSet& vs = cls[part];
        for (std::size_t i = 0; i < vs.size(); ++i)
            for (std::size_t j = i + 1; j < vs.size(); ++j) {
                Colour c = kRed;
                if (interior) {
                    c = (*interior)(vs[i], vs[j]);
                    if (c != kRed && c != inner)
                        throw std::invalid_argument(
                            "interior colouring must use red or the class colour");
                }
                g.set(vs[i], vs[j], c);
            }
    }
    return g;
}

}  // namespace

EdgeColouring eoo_construction_1(int n, int m, int l) {
    require_even(n, "n");
    require_odd(m, "m");
    require_odd(l, "l");
    int s = n - 1;
    auto cls = consecutive_classes({s, s, s, s});
    EdgeColouring g(4 * s, 3);
    for (const auto& c : cls) colour_within(g, c, kRed);
    colour_between(g, cls[0], cls[2], kBlue);
    colour_between(g, cls[1], cls[3], kBlue);
    colour_between(g, set_union(cls[0], cls[2]), set_union(cls[1], cls[3]), kGreen);
    return g;
}

EdgeColouring eoo_construction_2(int n, int m, const std::optional<InteriorColouring>& interior) {
    return eoo_23(n, m, kBlue, kGreen, interior);
}

EdgeColouring eoo_construction_3(int n, int l, const std::optional<InteriorColouring>& interior) {
    return eoo_23(n, l, kGreen, kBlue, interior);
}

EdgeColouring two_colour_even_extremal(int n) {
    return r_colour_even_extremal(n, 2);
}

EdgeColouring odd_doubling(const EdgeColouring& base, Colour new_colour) {
    if (new_colour.index != base.colour_count())
        throw std::invalid_argument("odd_doubling: new colour must be the next fresh index");
    int nb = base.vertex_count();
    EdgeColouring g(2 * nb, base.colour_count() + 1);
    for (int u = 0; u < nb; ++u)
        for (int v = u + 1; v < nb; ++v) {
            Colour c = base.colour_of(u, v);
            g.set(u, v, c);
            g.set(u + nb, v + nb, c);
        }
    for (int u = 0; u < nb; ++u)
        for (int v = nb; v < 2 * nb; ++v) g.set(u, v, new_colour);
    return g;
}

EdgeColouring odd_r_colour_extremal(int n, int r) {
    if (n < 3 || n % 2 == 0) throw hypothesis_error("n must be odd and >= 3");
    if (r < 1 || r > kMaxColours) throw std::invalid_argument("colour count out of range");
    EdgeColouring g(n - 1, 1);
    colour_within(g, [&] {
        VertexSet all(n - 1);
        std::iota(all.begin(), all.end(), 0);
        return all;
    }(), Colour{0});
    for (int c = 1; c < r; ++c) g = odd_doubling(g, Colour{c});
    return g;
}

EdgeColouring r_colour_even_extremal(int n, int r) {
    require_even(n, "n");
    if (r < 2 || r > kMaxColours) throw std::invalid_argument("colour count out of range");
    std::vector<int> sizes{n - 1};
    for (int i = 1; i < r; ++i) sizes.push_back(n / 2 - 1);
    auto cls = consecutive_classes(sizes);
    EdgeColouring g(std::accumulate(sizes.begin(), sizes.end(), 0), r);
    for (int i = 0; i < r; ++i) {
        colour_within(g, cls[i], Colour{i});
        for (int j = 0; j < i; ++j) colour_between(g, cls[j], cls[i], Colour{i});
    }
    return g;
}

std::vector<VertexSet> eoo_classes(int family, int n, int ml) {
    switch (family) {
        case 1:
            require_even(n, "n");
            return consecutive_classes({n - 1, n - 1, n - 1, n - 1});
        case 2:
        case 3:
            require_even(n, "n");
            require_odd(ml, "m");
            return consecutive_classes({ml - 1, ml - 1, n / 2 - 1, n / 2 - 1});
        default:
            throw std::invalid_argument("eoo_classes: family must be 1, 2 or 3");
    }
}

}  // namespace ramsey
