#pragma once

#include "ramsey/colouring.hpp"
#include "ramsey/components.hpp"
#include "ramsey/graph.hpp"

#include <cstdint>
#include <variant>
#include <vector>

namespace ramsey {

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

// A cycle given in cyclic vertex order. For searches over a plain graph the
// colour field is 0; coloured overloads fill in the colour searched.
struct CycleWitness {
    std::vector<int> vertices;
    Colour colour{0};

    int length() const { return static_cast<int>(vertices.size()); }
    bool validate(const SimpleGraph& host) const;
    bool validate(const EdgeColouring& host) const;
    bool validate(const MultiColouredGraph& host) const;
};

struct SearchStats {
    std::uint64_t expansions = 0;
    std::uint64_t budget = 0;
};

// Search ran to completion: non-existence is proved.
struct AbsenceCertificate {
    SearchStats stats;
};

// Inconclusive: the expansion budget ran out first.
struct BudgetExhausted {
    SearchStats stats;
};

using CycleSearchResult = std::variant<CycleWitness, AbsenceCertificate, BudgetExhausted>;

bool found(const CycleSearchResult& r);
bool exhausted_absence(const CycleSearchResult& r);
SearchStats stats_of(const CycleSearchResult& r);

// Exact-length cycle detection. DFS anchored at each minimum cycle vertex over
// the 2-core, pruned by component size, bipartite parity, and BFS distance
// back to the anchor; ties broken by ascending vertex index.
CycleSearchResult find_cycle_exact(const SimpleGraph& g, int L,
                                   std::uint64_t budget = kDefaultBudget);
CycleSearchResult find_cycle_exact(const EdgeColouring& g, Colour c, int L,
                                   std::uint64_t budget = kDefaultBudget);
CycleSearchResult find_cycle_exact(const MultiColouredGraph& g, Colour c, int L,
                                   std::uint64_t budget = kDefaultBudget);

// First cycle of length >= min_len (serves the Erdős–Gallai route).
CycleSearchResult find_long_cycle(const SimpleGraph& g, int min_len,
                                  std::uint64_t budget = kDefaultBudget);

// Per-component parity map of a colour class.
ComponentMap has_odd_cycle(const SimpleGraph& g);
ComponentMap has_odd_cycle(const EdgeColouring& g, Colour c);
ComponentMap has_odd_cycle(const MultiColouredGraph& g, Colour c);

}  // namespace ramsey
