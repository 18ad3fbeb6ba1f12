#pragma once

#include "ramsey/cycle_search.hpp"
#include "ramsey/rational.hpp"

#include <variant>

namespace ramsey {

struct PathWitness {
    std::vector<int> vertices;  // in order; length() counts edges

    int length() const { return static_cast<int>(vertices.size()) - 1; }
    bool validate(const SimpleGraph& host) const;
};

using PathSearchResult = std::variant<PathWitness, AbsenceCertificate, BudgetExhausted>;

// Sufficient-condition checks (they decide the hypothesis, not Hamiltonicity).
bool dirac_check(const SimpleGraph& h);                 // n >= 3, min degree >= n/2
bool chvatal_check(const SimpleGraph& h);               // degree-sequence condition
// Balanced bipartition X, Y supplied by the caller; throws on malformed input
// (unbalanced, not a partition, or non-cross edges). Returns false below 4
// vertices, where the degree condition is vacuous but no cycle can exist.
bool moon_moser_check(const SimpleGraph& h, const VertexSet& X, const VertexSet& Y);

CycleSearchResult hamiltonian_cycle(const SimpleGraph& h, std::uint64_t budget = kDefaultBudget);

// Hamiltonian u-v path. When the degree hypotheses guarantee one (min degree
// >= n/2 + 1, n >= 4), it is built constructively via Bondy-Chvátal closure
// with rotation repairs — no search, polynomial time. Otherwise falls back to
// exhaustive DFS under the budget.
PathSearchResult hamiltonian_path_between(const SimpleGraph& h, int u, int v,
                                          std::uint64_t budget = kDefaultBudget);

// Greedy path from x_a to x_b (both in X1) through every vertex of X2,
// alternating sides. Hypotheses: |X1| > |X2| + 1, every X2-degree >= n/2 + 1,
// d(x_b) >= 2 and d(x_a) >= 1; violations raise hypothesis_error.
PathWitness bipartite_path_all_of_smaller(const SimpleGraph& h, const VertexSet& X1,
                                          const VertexSet& X2, int x_a, int x_b);

// Edge-count hypothesis of the Erdős–Gallai long-cycle theorem:
// e(h) >= (m-1)(K-1)/2 + 1 for 3 <= m <= K.
bool erdos_gallai_guarantee(const SimpleGraph& h, int m);

}  // namespace ramsey
