#pragma once

#include "ramsey/colouring.hpp"
#include "ramsey/graph.hpp"
#include "ramsey/rational.hpp"

#include <cstdint>
#include <optional>

namespace ramsey {

enum class RegularityMode { exact, sampled };

struct RegularityViolation {
    VertexSet a_subset, b_subset;
    Rational subset_density;
    Rational pair_density;
};

// regular == no qualifying subset pair (|A'| >= eps|A|, |B'| >= eps|B|, both
// non-empty) deviates from the pair density by eps or more. Only exhaustive
// results prove regularity; sampled results merely report "no violation found".
struct RegularityResult {
    bool regular = false;
    bool exhaustive = false;
    std::uint64_t pairs_checked = 0;
    std::optional<RegularityViolation> violation;
};

struct RegularityOptions {
    int exact_limit = 14;           // exact mode refuses sides larger than this
    std::uint64_t trials = 20000;   // sampled mode
    std::uint64_t seed = 0;
};

RegularityResult is_eps_regular(const SimpleGraph& g, const VertexSet& A, const VertexSet& B,
                                const Rational& eps, RegularityMode mode,
                                const RegularityOptions& opt = {});

RegularityResult is_eps_regular(const EdgeColouring& g, const VertexSet& A, const VertexSet& B,
                                Colour c, const Rational& eps, RegularityMode mode,
                                const RegularityOptions& opt = {});

RegularityResult is_eps_regular(const MultiColouredGraph& g, const VertexSet& A, const VertexSet& B,
                                Colour c, const Rational& eps, RegularityMode mode,
                                const RegularityOptions& opt = {});

}  // namespace ramsey
