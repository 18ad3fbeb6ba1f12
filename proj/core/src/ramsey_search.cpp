#include "ramsey/ramsey_search.hpp"

#include "ramsey/rational.hpp"

#include <algorithm>
#include <cstdlib>
#include <future>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>

namespace ramsey {

namespace {

constexpr const char* kPruningScheme =
    "first-use-colour-canonical + v2-transposition + mono-cycle-cut";

struct EdgeSlot {
    int u = 0, v = 0;
};

// Triangular order: all edges into vertex v before any edge into v+1, so a
// prefix of the slot list is a colouring of a complete graph on fewer
// vertices plus a partial last row.
std::vector<EdgeSlot> triangular_slots(int n) {
    std::vector<EdgeSlot> slots;
    slots.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) slots.push_back({u, v});
    return slots;
}

// Does colour c of the partial colouring close a cycle of length len through
// the just-assigned edge (u, v)? Looks for a simple c-path u -> v with
// len - 1 edges. Any monochromatic target in a partial colouring is caught
// at the moment its last edge is assigned, so checking only through (u, v)
// suffices for the enumeration cut.
bool closes_target(const EdgeColouring& g, int u, int v, Colour c, int len) {
    const int n = g.vertex_count();
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    used[static_cast<std::size_t>(u)] = 1;
    auto step = [&](auto&& self, int at, int remaining) -> bool {
        if (remaining == 0) return at == v;
        for (int w = 0; w < n; ++w) {
            if (used[static_cast<std::size_t>(w)] || w == at) continue;
            if (w == v && remaining != 1) continue;
            if (!g.is_set(at, w) || g.colour_of(at, w) != c) continue;
            if (w == v) return true;
            used[static_cast<std::size_t>(w)] = 1;
            if (self(self, w, remaining - 1)) return true;
            used[static_cast<std::size_t>(w)] = 0;
        }
        return false;
    };
    return step(step, u, len - 1);
}

// Depth-first enumeration of one canonical representative per colour/vertex
// symmetry orbit, cut as soon as a monochromatic target closes. Canonical
// rules (each sound on its own and jointly, by taking the lexicographically
// least image over the full product of colour permutations among equal
// targets with the vertex transposition (0 1), which fixes slot (0,1) and
// swaps slots (0,2) and (1,2)):
//   - a colour may first appear only after every earlier colour with the
//     same target length has appeared;
//   - colour(0,2) <= colour(1,2).
struct ForcedSearch {
    const RamseySpec& spec;
    int n;
    std::vector<EdgeSlot> slots;
    EdgeColouring g;
    std::vector<int> use_count;
    std::uint64_t budget = 0;
    std::uint64_t nodes = 0;
    std::uint64_t leaves = 0;
    bool out_of_budget = false;
    std::optional<EdgeColouring> witness;

    ForcedSearch(const RamseySpec& s, int nn, std::uint64_t b)
        : spec(s), n(nn), slots(triangular_slots(nn)), g(nn, s.targets.colour_count()),
          use_count(static_cast<std::size_t>(s.targets.colour_count()), 0), budget(b) {}

    bool colour_allowed(std::size_t idx, int ci) const {
        const auto& ts = spec.targets.targets;
        for (int cj = 0; cj < ci; ++cj)
            if (ts[static_cast<std::size_t>(cj)].length == ts[static_cast<std::size_t>(ci)].length &&
                use_count[static_cast<std::size_t>(cj)] == 0)
                return false;
        if (idx == 2 && ci < g.colour_of(0, 2).index) return false;
        return true;
    }

    // Returns true when a target-free colouring was found (search stops).
    bool dfs(std::size_t idx, std::size_t stop_at) {
        if (idx == stop_at) {
            ++leaves;
            witness = g;
            return true;
        }
        if (++nodes > budget) {
            out_of_budget = true;
            return false;
        }
        const auto [u, v] = slots[idx];
        const int r = spec.targets.colour_count();
        for (int ci = 0; ci < r; ++ci) {
            if (!colour_allowed(idx, ci)) continue;
            g.set(u, v, Colour{ci});
            if (closes_target(g, u, v, Colour{ci},
                              spec.targets.targets[static_cast<std::size_t>(ci)].length)) {
                g.unset(u, v);
                continue;
            }
            ++use_count[static_cast<std::size_t>(ci)];
            const bool done = dfs(idx + 1, stop_at);
            --use_count[static_cast<std::size_t>(ci)];
            g.unset(u, v);
            if (done) return true;
            if (out_of_budget) return false;
        }
        return false;
    }

    void load_prefix(const std::vector<int>& prefix) {
        for (std::size_t i = 0; i < prefix.size(); ++i) {
            g.set(slots[i].u, slots[i].v, Colour{prefix[i]});
            ++use_count[static_cast<std::size_t>(prefix[i])];
        }
    }
};

// Enumerates canonical target-free prefixes of the first `depth` slots; each
// becomes an independent subtree task.
std::vector<std::vector<int>> canonical_prefixes(const RamseySpec& spec, int n, std::size_t depth) {
    std::vector<std::vector<int>> out;
    ForcedSearch fs(spec, n, std::numeric_limits<std::uint64_t>::max());
    std::vector<int> cur;
    auto rec = [&](auto&& self, std::size_t idx) -> void {
        if (idx == depth) {
            out.push_back(cur);
            return;
        }
        const auto [u, v] = fs.slots[idx];
        for (int ci = 0; ci < spec.targets.colour_count(); ++ci) {
            if (!fs.colour_allowed(idx, ci)) continue;
            fs.g.set(u, v, Colour{ci});
            if (!closes_target(fs.g, u, v, Colour{ci},
                               spec.targets.targets[static_cast<std::size_t>(ci)].length)) {
                ++fs.use_count[static_cast<std::size_t>(ci)];
                cur.push_back(ci);
                self(self, idx + 1);
                cur.pop_back();
                --fs.use_count[static_cast<std::size_t>(ci)];
            }
            fs.g.unset(u, v);
        }
    };
    rec(rec, 0);
    return out;
}

int resolve_workers(int workers) {
    if (workers <= 0) {
        if (const char* env = std::getenv("RAMSEY_WORKERS")) {
            try {
                workers = std::stoi(env);
            } catch (const std::exception&) {
                workers = 1;
            }
        }
    }
    return std::clamp(workers, 1, 64);
}

struct TaskResult {
    std::uint64_t nodes = 0;
    std::uint64_t leaves = 0;
    bool out_of_budget = false;
    std::optional<EdgeColouring> witness;
};

TaskResult run_task(const RamseySpec& spec, int n, const std::vector<int>& prefix,
                    std::size_t depth, std::uint64_t task_budget) {
    ForcedSearch fs(spec, n, task_budget);
    fs.load_prefix(prefix);
    fs.dfs(depth, fs.slots.size());
    return {fs.nodes, fs.leaves, fs.out_of_budget, std::move(fs.witness)};
}

RamseyRecord search_one_n(const RamseySpec& spec, int n, std::uint64_t budget, int workers) {
    RamseyRecord rec;
    rec.n = n;
    rec.stats.pruning = kPruningScheme;

    ForcedSearch probe(spec, n, budget);
    if (probe.slots.empty()) {
        // No edges: the empty colouring is vacuously target-free.
        rec.status = NStatus::free_colouring;
        rec.witness = probe.g;
        rec.stats.complete = true;
        rec.stats.leaves = 1;
        return rec;
    }

    const std::size_t depth = std::min<std::size_t>(3, probe.slots.size());
    const auto prefixes = canonical_prefixes(spec, n, depth);
    if (prefixes.empty()) {
        rec.status = NStatus::forced;
        rec.stats.complete = true;
        return rec;
    }

    const std::uint64_t per_task = std::max<std::uint64_t>(1, budget / prefixes.size());
    std::vector<TaskResult> results(prefixes.size());
    const int lanes = std::min<int>(resolve_workers(workers), static_cast<int>(prefixes.size()));

    if (lanes <= 1) {
        for (std::size_t t = 0; t < prefixes.size(); ++t)
            results[t] = run_task(spec, n, prefixes[t], depth, per_task);
    } else {
        std::vector<std::future<void>> lanes_fut;
        lanes_fut.reserve(static_cast<std::size_t>(lanes));
        for (int lane = 0; lane < lanes; ++lane) {
            lanes_fut.push_back(std::async(std::launch::async, [&, lane] {
                for (std::size_t t = static_cast<std::size_t>(lane); t < prefixes.size();
                     t += static_cast<std::size_t>(lanes))
                    results[t] = run_task(spec, n, prefixes[t], depth, per_task);
            }));
        }
        for (auto& f : lanes_fut) f.get();
    }

    bool any_cut = false;
    std::optional<std::size_t> first_witness;
    for (std::size_t t = 0; t < results.size(); ++t) {
        rec.stats.nodes += results[t].nodes;
        rec.stats.leaves += results[t].leaves;
        any_cut = any_cut || results[t].out_of_budget;
        if (results[t].witness && !first_witness) first_witness = t;
    }

    if (first_witness) {
        rec.status = NStatus::free_colouring;
        rec.witness = results[*first_witness].witness;
        rec.stats.complete = false;  // stopped at the first witness
        // Independent re-check of the witness before reporting it.
        for (int ci = 0; ci < spec.targets.colour_count(); ++ci) {
            auto res = find_cycle_exact(*rec.witness, Colour{ci},
                                        spec.targets.targets[static_cast<std::size_t>(ci)].length);
            if (!exhausted_absence(res))
                throw std::logic_error("ramsey_exact: enumerated witness failed re-check");
        }
        return rec;
    }
    rec.stats.complete = !any_cut;
    rec.status = rec.stats.complete ? NStatus::forced : NStatus::inconclusive;
    return rec;
}

}  // namespace

void RamseySpec::validate() const { targets.validate(); }

Certificate verify_lower_bound(const EdgeColouring& g, const RamseySpec& spec,
                               std::uint64_t budget) {
    spec.validate();
    if (g.colour_count() != spec.targets.colour_count())
        throw std::invalid_argument("verify_lower_bound: colour count mismatch");
    if (!g.is_total())
        throw std::invalid_argument("verify_lower_bound: colouring is not total");

    Certificate cert;
    cert.spec = spec;
    cert.bound = g.vertex_count() + 1;
    cert.direction = BoundDirection::lower;
    cert.colouring = g;

    bool all_absent = true;
    for (int ci = 0; ci < spec.targets.colour_count(); ++ci) {
        ColourOutcome oc;
        oc.colour = Colour{ci};
        oc.target_length = spec.targets.targets[static_cast<std::size_t>(ci)].length;
        auto res = find_cycle_exact(g, oc.colour, oc.target_length, budget);
        oc.stats = stats_of(res);
        if (found(res)) {
            oc.cycle = std::get<CycleWitness>(res);
        } else if (exhausted_absence(res)) {
            oc.absence_certified = true;
        }
        all_absent = all_absent && oc.absence_certified;
        cert.outcomes.push_back(std::move(oc));
    }
    cert.verified = all_absent;
    return cert;
}

RamseyScan ramsey_exact(const RamseySpec& spec, int n_lo, int n_hi, std::uint64_t budget,
                        int workers) {
    spec.validate();
    if (n_lo < 1 || n_hi < n_lo) throw std::invalid_argument("ramsey_exact: bad range");

    RamseyScan scan;
    for (int n = n_lo; n <= n_hi; ++n) {
        RamseyRecord rec = search_one_n(spec, n, budget, workers);
        const NStatus status = rec.status;
        scan.records.push_back(std::move(rec));
        if (status == NStatus::forced) {
            scan.value = n;
            return scan;  // monotone: every larger N is forced too
        }
        if (status == NStatus::inconclusive) {
            scan.complete = false;
            scan.unresolved_lo = n;
            return scan;
        }
    }
    return scan;  // every N in range admits a free colouring: R > n_hi
}

Certificate upper_bound_certificate(const RamseySpec& spec, const RamseyRecord& record) {
    if (record.status != NStatus::forced)
        throw std::invalid_argument("upper_bound_certificate: record is not a forced size");
    Certificate cert;
    cert.spec = spec;
    cert.bound = record.n;
    cert.direction = BoundDirection::upper;
    cert.exhaustion = record.stats;
    cert.verified = record.stats.complete;
    return cert;
}

int theorem_c_formula(int n, int m, int l) {
    if (n < 4 || n % 2 != 0) throw hypothesis_error("n must be even and >= 4");
    if (m < 5 || m % 2 == 0) throw hypothesis_error("m must be odd and >= 5");
    if (l < 5 || l % 2 == 0) throw hypothesis_error("l must be odd and >= 5");
    return std::max({4 * n, n + 2 * m, n + 2 * l}) - 3;
}

EdgeColouring extremal_for(int n, int m, int l) {
    const int a = 4 * n, b = n + 2 * m, c = n + 2 * l;
    theorem_c_formula(n, m, l);  // parity gate
    if (a >= b && a >= c) return eoo_construction_1(n, m, l);
    if (b >= c) return eoo_construction_2(n, m);
    return eoo_construction_3(n, l);
}

RamseySpec eoo_spec(int n, int m, int l) {
    RamseySpec spec;
    spec.targets.targets = {CycleTarget{n}, CycleTarget{m}, CycleTarget{l}};
    spec.validate();
    return spec;
}

}  // namespace ramsey
