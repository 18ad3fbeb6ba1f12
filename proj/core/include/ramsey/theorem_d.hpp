#pragma once

#include "ramsey/matching.hpp"
#include "ramsey/structures.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ramsey {

struct TheoremDParams {
    Rational alpha1, alpha2, alpha3;
    Rational eta;
    long long k = 1;

    Rational c() const;      // max{4a1, a1+2a2, a1+2a3}
    Rational beta() const;   // max{a2, a3}
    Rational eta_d() const;  // explicit min-formula bound on eta
    void validate() const;   // positivity; throws std::invalid_argument
};

// A structure copy found on `support` (original vertex ids). The witness is
// expressed in the coordinates of induced_multi(g, support), whose vertex i
// is support[i] after sorting.
struct StructureCopy {
    VertexSet support;
    std::optional<HWitness> h;
    std::optional<JWitness> j;
    std::string note;  // which parameterisation matched
};

struct TheoremDOutcome {
    int outcome = 0;                              // 1..6; 0 = nothing found
    std::optional<ConnectedMatching> matching;    // outcomes 1-3
    std::optional<VertexSet> w_set;               // outcome 4
    std::optional<StructureCopy> copy_x, copy_y;  // outcomes 4-5
    std::optional<LWitness> l_witness;            // outcome 6
    std::optional<Colour> gamma;                  // outcomes 4-5
    std::vector<std::string> annotations;         // hypothesis + side-condition notes
    bool searches_exhaustive = false;             // meaningful when outcome == 0
};

// Tries the six conclusions in statement order and returns the first that
// verifiably holds. Asymptotic hypotheses (the K window, completeness, the
// implicit lower bound on k) are reported in `annotations`, never enforced:
// failing to find an outcome at small scale does not contradict anything.
// The two-copy searches use a degree-signature candidate pool and are
// heuristic; `searches_exhaustive` says whether a 0 result is a proof.
TheoremDOutcome theorem_d_classify(const MultiColouredGraph& g, const TheoremDParams& p,
                                   std::uint64_t budget_per_search = 300'000);
TheoremDOutcome theorem_d_classify(const EdgeColouring& g, const TheoremDParams& p,
                                   std::uint64_t budget_per_search = 300'000);

}  // namespace ramsey
