#pragma once

#include "ramsey/cycle_search.hpp"
#include "ramsey/hamilton.hpp"
#include "ramsey/matching.hpp"
#include "ramsey/reduced_graph.hpp"

#include <stdexcept>
#include <string>

namespace ramsey {

// The two asymptotic hypotheses of the long-path lemma; at desk scale they
// rarely hold, so they are reported rather than enforced.
struct LongPathHypotheses {
    bool eps_below_bound = false;       // eps < 1/600
    bool k_at_least_inverse_eps = false;  // k >= 1/eps
};

// Raised when the greedy embedding dead-ends or runs out of budget; carries a
// description of the state reached.
struct embed_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Largest legal ell for a pair with usable side size k: ell <= k - 2*sqrt(eps)k
// and ell + 1 <= k. Returns 0 when no positive ell qualifies.
int long_path_max_ell(int k, const Rational& eps);

// Path of length 2*ell+1 from v_start (in V1) to v_end (in V2), alternating
// sides, through vertices of cross-degree >= (2/3)sqrt(eps)k. Checkable
// hypotheses (edge count, ell range, endpoint degrees) raise hypothesis_error;
// ell = 0 degenerates to the single edge v_start-v_end.
PathWitness embed_long_path(const SimpleGraph& g, const VertexSet& V1, const VertexSet& V2, int ell,
                            int v_start, int v_end, const Rational& eps,
                            LongPathHypotheses* asymptotic = nullptr);

enum class BlowupFailure { capacity, parity, embedding };

struct blowup_error : std::runtime_error {
    BlowupFailure kind;
    blowup_error(BlowupFailure k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
};

// Achievable cycle lengths for blowing M up to the given parity: every length
// of that parity in [min_length, max_length]. Lengths are
//   sum over matching edges of (2*ell_i + 1)  +  sum of connector walk lengths,
// with 1 <= ell_i <= cap_i; cap_i = long_path_max_ell over the pair's parts
// after reserving connector vertices.
struct BlowupCapacity {
    int min_length = 0;
    int max_length = 0;
};

BlowupCapacity blow_up_capacity(const EdgeColouring& g, const Partition& pi, const ReducedGraph& rg,
                                const ConnectedMatching& M, bool odd_target, Colour colour);

// Lifts a reduced connected-matching to a cycle of exactly target_length in
// the host colouring: connector walks are BFS-routed through the reduced
// colour component (detouring around an odd cycle when parity demands), the
// matching pairs carry odd-length segments built by embed_long_path.
CycleWitness blow_up_matching_to_cycle(const EdgeColouring& g, const Partition& pi,
                                       const ReducedGraph& rg, const ConnectedMatching& M,
                                       int target_length, Colour colour);

}  // namespace ramsey
