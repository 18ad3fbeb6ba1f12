#pragma once

#include "ramsey/colouring.hpp"
#include "ramsey/partition.hpp"
#include "ramsey/regularity_check.hpp"

#include <string>

namespace ramsey {

struct ReducedProvenance {
    Rational eps;
    Rational xi;
    RegularityMode mode = RegularityMode::exact;
    bool exhaustive = true;      // every pair check was exhaustive
    std::uint64_t seed = 0;      // sampling parameters, when used
    std::uint64_t trials = 0;
    std::string source;          // free-form identifier of the host graph
};

// Graph on part indices. regular_pairs holds every pair that is
// simultaneously eps-regular in all colours (per the recorded mode);
// coloured carries colour c on such a pair iff d_c >= xi, and so omits
// regular pairs whose every colour density falls below xi.
struct ReducedGraph {
    MultiColouredGraph coloured{0, 1};
    SimpleGraph regular_pairs{0};
    Partition partition;
    ReducedProvenance provenance;
};

// Exact densities; regularity per the requested mode. Pairs larger than
// opts.exact_limit fall back to sampling and clear the exhaustive flag.
ReducedGraph build_reduced_graph(const EdgeColouring& g, const Partition& pi, const Rational& eps,
                                 const Rational& xi, RegularityMode mode,
                                 const RegularityOptions& opts = {});

}  // namespace ramsey
