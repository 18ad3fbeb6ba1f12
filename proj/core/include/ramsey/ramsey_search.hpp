#pragma once

#include "ramsey/constructions.hpp"
#include "ramsey/cycle_search.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ramsey {

// Target i is the cycle sought in colour i.
struct RamseySpec {
    CycleTargets targets;
    void validate() const;  // at least one target, all lengths >= 3
};

enum class BoundDirection { lower, upper };

struct ColourOutcome {
    Colour colour;
    int target_length = 0;
    bool absence_certified = false;       // exhaustive absence proof
    std::optional<CycleWitness> cycle;    // the target, when one was found
    SearchStats stats;
};

struct SearchExhaustion {
    std::uint64_t nodes = 0;
    std::uint64_t leaves = 0;  // target-free colourings reached
    bool complete = false;
    std::string pruning;       // canonical-pruning scheme id
};

// `bound` is the claimed value: direction lower claims R >= bound (backed by
// a target-free colouring on bound-1 vertices), direction upper claims
// R <= bound (backed by an exhaustive forced-colouring search).
struct Certificate {
    RamseySpec spec;
    int bound = 0;
    BoundDirection direction = BoundDirection::lower;
    bool verified = false;
    std::optional<EdgeColouring> colouring;
    std::vector<ColourOutcome> outcomes;
    std::optional<SearchExhaustion> exhaustion;
};

// Runs the exact cycle detector once per colour at the target length; the
// certificate verifies iff every colour yields an exhaustive absence proof.
// The colouring must be total; its colour count must match the spec.
Certificate verify_lower_bound(const EdgeColouring& g, const RamseySpec& spec,
                               std::uint64_t budget = kDefaultBudget);

enum class NStatus { free_colouring, forced, inconclusive };

struct RamseyRecord {
    int n = 0;
    NStatus status = NStatus::inconclusive;
    std::optional<EdgeColouring> witness;  // target-free colouring when free
    SearchExhaustion stats;
};

struct RamseyScan {
    std::optional<int> value;           // smallest forced N in range, if proved
    std::vector<RamseyRecord> records;  // per scanned N, ascending
    bool complete = true;               // false when a budget cut stopped the scan
    std::optional<int> unresolved_lo;   // with n_hi, the open interval on a cut
};

// Smallest N in [n_lo, n_hi] such that every colouring of K_N contains some
// target, by canonical edge-by-edge enumeration (first-use colour canonicity
// among equal-length targets, one shallow vertex transposition rule, and a
// cut as soon as a monochromatic target closes). Forced N are final: a free
// colouring of K_{N+1} restricts to one of K_N, so the scan stops at the
// first forced or inconclusive N. `workers` 0 reads RAMSEY_WORKERS (default
// 1); the result is deterministic and independent of the schedule.
RamseyScan ramsey_exact(const RamseySpec& spec, int n_lo, int n_hi,
                        std::uint64_t budget = 50'000'000, int workers = 0);

// Upper-bound certificate from a forced record produced by ramsey_exact.
Certificate upper_bound_certificate(const RamseySpec& spec, const RamseyRecord& record);

// max{4n, n+2m, n+2l} - 3 for n even, m and l odd (parities enforced).
int theorem_c_formula(int n, int m, int l);

// The extremal family achieving the argmax of theorem_c_formula, built on
// formula-1 vertices; ties resolve toward the first family, then the second.
EdgeColouring extremal_for(int n, int m, int l);

// Targets (C_n red, C_m blue, C_l green).
RamseySpec eoo_spec(int n, int m, int l);

}  // namespace ramsey
