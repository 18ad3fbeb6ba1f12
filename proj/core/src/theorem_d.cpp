#include "ramsey/theorem_d.hpp"

#include "ramsey/components.hpp"
#include "ramsey/predicates.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace ramsey {

Rational TheoremDParams::c() const {
    return std::max({Rational(4 * alpha1), Rational(alpha1 + 2 * alpha2), Rational(alpha1 + 2 * alpha3)});
}

Rational TheoremDParams::beta() const {
    return std::max(alpha2, alpha3);
}

Rational TheoremDParams::eta_d() const {
    const Rational cap(BigInt(1), boost::multiprecision::pow(BigInt(10), 40));
    const Rational mn = std::min({alpha1, alpha2, alpha3});
    const Rational mx = std::max({alpha1, alpha2, alpha3});
    return std::min({cap, pow_rational(alpha1 / 50, 16), pow_rational(alpha2 / 50, 16),
                     pow_rational(alpha3 / 50, 16), pow_rational(mn / (100 * mx), 4)});
}

void TheoremDParams::validate() const {
    if (alpha1 <= 0 || alpha2 <= 0 || alpha3 <= 0)
        throw std::invalid_argument("theorem_d: alphas must be positive");
    if (eta <= 0 || eta >= 1) throw std::invalid_argument("theorem_d: eta must lie in (0,1)");
    if (k < 1) throw std::invalid_argument("theorem_d: k must be a positive integer");
}

namespace {

struct HParams {
    int x1_min, x2_min;
    Rational c1, c2;
    Colour gamma1, gamma2;
    std::string label;
};

struct JParams {
    int x_min;
    Rational c;
    Colour gamma1, gamma2;
    std::string label;
};

int positive(long long threshold) {
    return static_cast<int>(std::max<long long>(1, threshold));
}

// Union of the non-bipartite components of g's gamma colour class. Any W'
// whose induced gamma-components are all odd is a subset of this union, so
// it is the maximal candidate for outcome (iv)'s ambient set.
VertexSet odd_component_union(const MultiColouredGraph& g, Colour gamma) {
    ComponentMap cm = components(g.colour_class(gamma));
    VertexSet w;
    for (int id = 0; id < cm.count(); ++id)
        if (cm.odd[id]) w.insert(w.end(), cm.members[id].begin(), cm.members[id].end());
    std::sort(w.begin(), w.end());
    return w;
}

std::optional<StructureCopy> find_copy(const MultiColouredGraph& g, const VertexSet& support,
                                       const std::vector<HParams>& h_options,
                                       const std::vector<JParams>& j_options,
                                       std::uint64_t budget) {
    MultiColouredGraph sub = induced_multi(g, support);
    for (const auto& hp : h_options) {
        auto r = search_h(sub, hp.x1_min, hp.x2_min, hp.c1, hp.c2, hp.gamma1, hp.gamma2, budget);
        if (r.status == SearchStatus::found) {
            StructureCopy copy;
            copy.support = support;
            copy.h = std::move(r.witness);
            copy.note = hp.label;
            return copy;
        }
    }
    for (const auto& jp : j_options) {
        auto r = search_j(sub, jp.x_min, jp.c, jp.gamma1, jp.gamma2, budget);
        if (r.status == SearchStatus::found) {
            StructureCopy copy;
            copy.support = support;
            copy.j = std::move(r.witness);
            copy.note = jp.label;
            return copy;
        }
    }
    return std::nullopt;
}

// Splits `support` along its degree-signature groups (largest candidate X
// first) and looks for a structure copy on each side.
std::optional<std::pair<StructureCopy, StructureCopy>> find_structure_pair(
    const MultiColouredGraph& g, const VertexSet& support, const std::vector<HParams>& h_options,
    const std::vector<JParams>& j_options, std::uint64_t budget,
    std::vector<std::string>& annotations) {
    MultiColouredGraph sub = induced_multi(g, support);
    const int n = sub.vertex_count();
    if (n < 2) return std::nullopt;

    std::vector<std::vector<int>> groups;  // local ids
    {
        std::map<std::vector<int>, std::vector<int>> by;
        std::vector<std::vector<int>> sig(n, std::vector<int>(sub.colour_count(), 0));
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) {
                ColourSet cs = sub.colours_of(u, v);
                for (int c = 0; c < sub.colour_count(); ++c)
                    if (cs.contains(Colour{c})) {
                        ++sig[u][c];
                        ++sig[v][c];
                    }
            }
        for (int v = 0; v < n; ++v) by[sig[v]].push_back(v);
        for (auto& [key, vs] : by) groups.push_back(vs);
        std::sort(groups.begin(), groups.end(),
                  [](const auto& a, const auto& b) { return a.front() < b.front(); });
    }
    const std::size_t t = groups.size();
    if (t < 2 || t > 6) {
        annotations.push_back("two-copy search skipped: degree-signature pool has " +
                              std::to_string(t) + " group(s); only 2..6 are searchable");
        return std::nullopt;
    }

    std::vector<std::uint32_t> masks;
    for (std::uint32_t m = 1; m + 1 < (1u << t); ++m) masks.push_back(m);
    auto mask_size = [&](std::uint32_t m) {
        std::size_t s = 0;
        for (std::size_t i = 0; i < t; ++i)
            if (m & (1u << i)) s += groups[i].size();
        return s;
    };
    std::sort(masks.begin(), masks.end(), [&](std::uint32_t a, std::uint32_t b) {
        auto sa = mask_size(a), sb = mask_size(b);
        return sa != sb ? sa > sb : a < b;
    });

    for (std::uint32_t m : masks) {
        VertexSet x_ids, y_ids;
        for (std::size_t i = 0; i < t; ++i)
            for (int v : groups[i]) (m & (1u << i) ? x_ids : y_ids).push_back(support[v]);
        std::sort(x_ids.begin(), x_ids.end());
        std::sort(y_ids.begin(), y_ids.end());
        auto cx = find_copy(g, x_ids, h_options, j_options, budget);
        if (!cx) continue;
        auto cy = find_copy(g, y_ids, h_options, j_options, budget);
        if (cy) return std::make_pair(std::move(*cx), std::move(*cy));
    }
    return std::nullopt;
}

std::string held(bool b) {
    return b ? "holds" : "VIOLATED";
}

}  // namespace

TheoremDOutcome theorem_d_classify(const MultiColouredGraph& g, const TheoremDParams& p,
                                   std::uint64_t budget_per_search) {
    p.validate();
    if (g.colour_count() != 3)
        throw std::invalid_argument("theorem_d_classify: exactly three colours required");

    TheoremDOutcome out;
    const int K = g.vertex_count();
    const Rational k(p.k);
    const Rational c = p.c();
    const Rational beta = p.beta();

    out.annotations.push_back(std::string("eta ") + (p.eta < p.eta_d() ? "within" : "EXCEEDS") +
                              " the eta_D bound " + approx_decimal(p.eta_d(), 12));
    out.annotations.push_back(
        "host (1-eta^4)-completeness " +
        held(is_complete_fraction(g.presence_graph(), pow_rational(p.eta, 4))));
    out.annotations.push_back("K window (c-eta)k <= K <= (c-eta/2)k " +
                              held(Rational(K) >= (c - p.eta) * k &&
                                   Rational(K) <= (c - p.eta / 2) * k) +
                              " (asymptotic; desk-scale violations are expected)");
    if (Rational(K) * p.eta < 100)
        out.annotations.push_back("K < 100/eta: asymptotic size hypothesis unmet at this scale");
    if (p.alpha1 > 1 || p.alpha2 > 1 || p.alpha3 > 1)
        out.annotations.push_back("alphas exceed 1; the statement assumes them scaled into (0,1]");

    struct MatchingTry {
        Colour col;
        Rational need;
        bool odd;
        int code;
    };
    const MatchingTry matching_tries[3] = {
        {kRed, p.alpha1 * k, false, 1},
        {kBlue, p.alpha2 * k, true, 2},
        {kGreen, p.alpha3 * k, true, 3},
    };
    for (const auto& mt : matching_tries) {
        auto m = largest_connected_matching(g, mt.col, mt.odd);
        if (m && Rational(m->vertex_count()) >= mt.need) {
            out.outcome = mt.code;
            out.matching = std::move(m);
            return out;
        }
    }

    // (iv): per gamma in {blue, green}, the maximal all-odd-components ambient
    // set; an undersized maximal W refutes the outcome exactly.
    const long long w_min = min_int_meeting_threshold(c, 1, p.eta, 2, k);
    bool iv_refuted = true;
    const std::pair<Rational, Colour> iv_variants[2] = {{p.alpha2, kBlue}, {p.alpha3, kGreen}};
    for (const auto& [alpha_star, gamma] : iv_variants) {
        VertexSet w = odd_component_union(g, gamma);
        if (static_cast<long long>(w.size()) < w_min) {
            out.annotations.push_back("outcome (iv) with gamma = " + colour_name(gamma) +
                                      " refuted: maximal ambient set has " +
                                      std::to_string(w.size()) + " < " + std::to_string(w_min) +
                                      " vertices");
            continue;
        }
        iv_refuted = false;
        std::vector<HParams> options;
        options.push_back(
            {positive(min_int_meeting_threshold(p.alpha1, 2, p.eta, 64, k)),
             positive(min_int_meeting_threshold(alpha_star / 2, 2, p.eta, 64, k)),
             4 * pow_rational(p.eta, 2) * k, rational_root_floor(p.eta, 64), kRed, gamma,
             "first parameterisation (red, " + colour_name(gamma) + ")"});
        options.push_back(
            {positive(min_int_meeting_threshold(alpha_star, 2, p.eta, 64, k)),
             positive(min_int_meeting_threshold(p.alpha1 / 2, 2, p.eta, 64, k)),
             4 * pow_rational(p.eta, 2) * k, rational_root_floor(p.eta, 64), gamma, kRed,
             "second parameterisation (" + colour_name(gamma) + ", red)"});
        auto pair = find_structure_pair(g, w, options, {}, budget_per_search, out.annotations);
        if (pair) {
            out.outcome = 4;
            out.w_set = std::move(w);
            out.copy_x = std::move(pair->first);
            out.copy_y = std::move(pair->second);
            out.gamma = gamma;
            const Rational mx = std::max(p.alpha2, p.alpha3);
            out.annotations.push_back(
                "side condition alpha1 <= max{alpha2, alpha3} " + held(p.alpha1 <= mx));
            out.annotations.push_back(
                "side condition max{alpha2, alpha3} <= alpha* + 24 eta^{1/4} " +
                held(cmp_root(mx - alpha_star, pow_rational(Rational(24), 4) * p.eta, 4) <= 0));
            if (cmp_root(p.alpha1 - alpha_star, pow_rational(p.alpha1, 16) * p.eta, 16) >= 0)
                out.annotations.push_back(
                    "alpha* <= (1 - eta^{1/16}) alpha1: copies expected in the first "
                    "parameterisation");
            if (cmp_root(alpha_star - p.alpha1, pow_rational(alpha_star, 16) * p.eta, 16) >= 0)
                out.annotations.push_back(
                    "alpha1 <= (1 - eta^{1/16}) alpha*: copies expected in the second "
                    "parameterisation");
            return out;
        }
    }

    // (v): no ambient set; both copies drawn from the starred class or the
    // exclusive-colour class. A host too small for two supports refutes it.
    bool v_refuted = false;
    {
        const int h_support = positive(min_int_meeting_threshold(beta, 2, p.eta, 32, k)) +
                              positive(min_int_meeting_threshold(p.alpha1 / 2, 2, p.eta, 32, k));
        const int j_support = 2 * positive(min_int_meeting_threshold(p.alpha1, 18, p.eta, 2, k));
        if (K < 2 * std::min(h_support, j_support)) {
            v_refuted = true;
            out.annotations.push_back("outcome (v) refuted: host too small for two copies");
        }
    }
    if (!v_refuted) {
        VertexSet all(K);
        std::iota(all.begin(), all.end(), 0);
        for (Colour gamma : {kBlue, kGreen}) {
            std::vector<HParams> h_options;
            h_options.push_back({positive(min_int_meeting_threshold(beta, 2, p.eta, 32, k)),
                                 positive(min_int_meeting_threshold(p.alpha1 / 2, 2, p.eta, 32, k)),
                                 4 * pow_rational(p.eta, 4) * k, rational_root_floor(p.eta, 32),
                                 gamma, kRed,
                                 "starred parameterisation (" + colour_name(gamma) + ", red)"});
            std::vector<JParams> j_options;
            j_options.push_back({positive(min_int_meeting_threshold(p.alpha1, 18, p.eta, 2, k)),
                                 4 * pow_rational(p.eta, 4) * k, kRed, gamma,
                                 "exclusive-colour parameterisation (red, " + colour_name(gamma) +
                                     ")"});
            auto pair =
                find_structure_pair(g, all, h_options, j_options, budget_per_search, out.annotations);
            if (pair) {
                out.outcome = 5;
                out.copy_x = std::move(pair->first);
                out.copy_y = std::move(pair->second);
                out.gamma = gamma;
                out.annotations.push_back("side condition alpha1 <= beta " +
                                          held(p.alpha1 <= beta));
                const bool h_allowed =
                    cmp_root(beta - p.alpha1, pow_rational(beta, 16) * p.eta, 16) >= 0;
                const bool j_allowed =
                    cmp_root(beta - Rational(3) * p.alpha1 / 2,
                             16 * pow_rational(p.alpha1, 4) * p.eta, 4) < 0;
                if (out.copy_x->h || out.copy_y->h)
                    out.annotations.push_back(
                        "starred-class copies allowed only if alpha1 <= (1 - eta^{1/16}) beta: " +
                        held(h_allowed));
                if (out.copy_x->j || out.copy_y->j)
                    out.annotations.push_back(
                        "exclusive-class copies allowed only if beta < (3/2 + 2 eta^{1/4}) "
                        "alpha1: " +
                        held(j_allowed));
                return out;
            }
        }
    }

    // (vi)
    const int l_min = positive(to_ll(ceil_rational((p.alpha1 / 2 + p.eta / 4) * k)));
    auto l_res = search_l(g, l_min, 4 * pow_rational(p.eta, 4) * k, kRed, kBlue, kGreen,
                          budget_per_search * 16);
    if (l_res.status == SearchStatus::found) {
        out.outcome = 6;
        out.l_witness = std::move(l_res.witness);
        out.annotations.push_back("side condition alpha1 >= max{alpha2, alpha3} " +
                                  held(p.alpha1 >= std::max(p.alpha2, p.alpha3)));
        return out;
    }

    out.outcome = 0;
    out.searches_exhaustive =
        iv_refuted && v_refuted && l_res.status == SearchStatus::none_exhausted;
    out.annotations.push_back(
        std::string("no outcome found; the two-copy searches are ") +
        (out.searches_exhaustive ? "exhaustive or refuted by counting, so this is definitive "
                                   "for the searched families"
                                 : "heuristic, so this is not a refutation") +
        "; the statement itself is asymptotic (its k bound is implicit) and is not "
        "contradicted by a small instance");
    return out;
}

TheoremDOutcome theorem_d_classify(const EdgeColouring& g, const TheoremDParams& p,
                                   std::uint64_t budget_per_search) {
    return theorem_d_classify(MultiColouredGraph::from(g), p, budget_per_search);
}

}  // namespace ramsey
