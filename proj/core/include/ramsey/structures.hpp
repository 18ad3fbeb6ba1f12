#pragma once

#include "ramsey/colouring.hpp"
#include "ramsey/graph.hpp"
#include "ramsey/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ramsey {

// Witnesses pin a concrete partition together with the class parameters they
// claim to meet. Verification runs against H = the subgraph of the host on
// the union of the witness parts, keeping only edges that carry at least one
// of the class colours; "exclusively" constraints look at an edge's colour
// set intersected with the class colours.

struct HWitness {
    VertexSet x1, x2;
    int x1_min = 1, x2_min = 1;
    Rational c1;  // almost-complete budget, vertex-count scale
    Rational c2;  // completeness/sparseness fraction
    Colour gamma1, gamma2;
};

struct JWitness {
    VertexSet x1, x2;
    int x_min = 1;
    Rational c;  // almost-complete budget, vertex-count scale
    Colour gamma1, gamma2;
};

struct LWitness {
    VertexSet x1, x2, y1, y2;
    int x_min = 1;
    Rational c;
    Colour gamma1, gamma2, gamma3;
};

struct ConditionReport {
    std::string name;
    bool ok = true;
    std::optional<std::pair<int, int>> edge;  // offending edge, if any
    std::optional<int> vertex;                // offending vertex, if any
};

struct StructureReport {
    std::vector<ConditionReport> conditions;
    bool all() const;
    // Looks a condition up by name; throws std::out_of_range if absent.
    const ConditionReport& at(std::string_view name) const;
};

// Condition names: "sizes", "almost_complete", then per class
//   H: "iii_a_complete", "iii_a_sparse", "iii_b_complete", "iii_b_sparse"
//   J: "iii_a", "iii_b"
//   L: "iii_a", "iii_b", "iii_c", "iii_d"
StructureReport verify_h(const MultiColouredGraph& g, const HWitness& w);
StructureReport verify_j(const MultiColouredGraph& g, const JWitness& w);
StructureReport verify_l(const MultiColouredGraph& g, const LWitness& w);
StructureReport verify_h(const EdgeColouring& g, const HWitness& w);
StructureReport verify_j(const EdgeColouring& g, const JWitness& w);
StructureReport verify_l(const EdgeColouring& g, const LWitness& w);

enum class SearchStatus { found, none_exhausted, inconclusive };

// Searches ask whether the whole of g belongs to the class, i.e. enumerate
// partitions of the full vertex set. Degree-signature seeding runs first;
// the exhaustive pass is a pruned DFS and reports none_exhausted only when
// it completed within budget. Default budgets cover the worst case up to
// kStructureExhaustiveCap vertices.
inline constexpr int kStructureExhaustiveCap = 12;

struct HSearchResult {
    SearchStatus status = SearchStatus::inconclusive;
    std::optional<HWitness> witness;
    std::uint64_t tried = 0;
};
struct JSearchResult {
    SearchStatus status = SearchStatus::inconclusive;
    std::optional<JWitness> witness;
    std::uint64_t tried = 0;
};
struct LSearchResult {
    SearchStatus status = SearchStatus::inconclusive;
    std::optional<LWitness> witness;
    std::uint64_t tried = 0;
};

HSearchResult search_h(const MultiColouredGraph& g, int x1_min, int x2_min, const Rational& c1,
                       const Rational& c2, Colour gamma1, Colour gamma2,
                       std::uint64_t budget = 5'000'000);
JSearchResult search_j(const MultiColouredGraph& g, int x_min, const Rational& c, Colour gamma1,
                       Colour gamma2, std::uint64_t budget = 5'000'000);
LSearchResult search_l(const MultiColouredGraph& g, int x_min, const Rational& c, Colour gamma1,
                       Colour gamma2, Colour gamma3, std::uint64_t budget = 50'000'000);

// Subgraph induced on vs; vertex i of the result is vs[i] of g (vs is
// normalised first, so positions follow the sorted order).
MultiColouredGraph induced_multi(const MultiColouredGraph& g, const VertexSet& vs);

}  // namespace ramsey
