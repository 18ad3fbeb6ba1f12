#pragma once

#include "ramsey/colouring.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace ramsey {

// Target cycle length per colour, parities resolved by the caller
// (floor_even/floor_odd exist for that).
struct CycleTarget {
    int length = 3;
    bool odd() const { return length % 2 != 0; }
};

struct CycleTargets {
    std::vector<CycleTarget> targets;

    int colour_count() const { return static_cast<int>(targets.size()); }
    void validate() const;  // all lengths >= 3
};

// Optional override for the free interior edges of constructions 2/3 (the
// classes V3, V4 admit either of two colours). Called with global vertex ids;
// must return one of the two permitted colours, which the builder enforces.
using InteriorColouring = std::function<Colour(int, int)>;

// Four classes of n-1 vertices: red inside each class, blue between V1-V3 and
// V2-V4, green across [V1 u V3, V2 u V4]. 4n-4 vertices total.
EdgeColouring eoo_construction_1(int n, int m, int l);

// |V1|=|V2|=m-1, |V3|=|V4|=n/2-1; red across [V1,V3] and [V2,V4]; blue inside
// V1, V2; green across [V1 u V3, V2 u V4]. Interior edges of V3, V4 default to
// red; the hook may choose red or blue per edge. n+2m-4 vertices.
EdgeColouring eoo_construction_2(int n, int m,
                                 const std::optional<InteriorColouring>& interior = std::nullopt);

// Same shape with blue and green swapped: green inside V1, V2; blue across the
// big bipartition; V3, V4 interiors red or green. n+2l-4 vertices.
EdgeColouring eoo_construction_3(int n, int l,
                                 const std::optional<InteriorColouring>& interior = std::nullopt);

// Class of n-1 vertices coloured 0 inside, all remaining edges (to and within
// a class of n/2-1) coloured 1. 3n/2-2 vertices.
EdgeColouring two_colour_even_extremal(int n);

// Two copies of base with all cross edges in the next fresh colour.
EdgeColouring odd_doubling(const EdgeColouring& base, Colour new_colour);

// Iterated doubling starting from an all-colour-0 K_{n-1}: r-coloured graph on
// 2^{r-1}(n-1) vertices avoiding monochromatic C_n for odd n.
EdgeColouring odd_r_colour_extremal(int n, int r);

// One class of n-1 vertices (colour 0 inside) plus r-1 classes of n/2-1;
// class i > 0 uses colour i inside and toward all earlier classes.
// (r+1)n/2 - r vertices.
EdgeColouring r_colour_even_extremal(int n, int r);

// The part structure of the eoo constructions, for tests and witnesses.
std::vector<VertexSet> eoo_classes(int family, int n, int ml);

}  // namespace ramsey
