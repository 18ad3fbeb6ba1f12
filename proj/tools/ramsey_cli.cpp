#include "ramsey/blowup.hpp"
#include "ramsey/colouring.hpp"
#include "ramsey/constructions.hpp"
#include "ramsey/cycle_search.hpp"
#include "ramsey/decompose.hpp"
#include "ramsey/json_io.hpp"
#include "ramsey/matching.hpp"
#include "ramsey/partition.hpp"
#include "ramsey/ramsey_search.hpp"
#include "ramsey/rational.hpp"
#include "ramsey/reduced_graph.hpp"
#include "ramsey/structures.hpp"
#include "ramsey/theorem_d.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using nlohmann::json;
using namespace ramsey;

namespace {

constexpr const char* kToolVersion = "0.1.0";

// Exit codes: 0 = definitive result (claim verified, refuted, or search space
// exhausted), 2 = inconclusive under budget/sampling, 1 = error.
constexpr int kOk = 0;
constexpr int kInconclusive = 2;

struct GlobalOpts {
    std::uint64_t seed = 0;
    std::uint64_t budget = 0;  // 0 = per-module default
    std::string mode = "exact";
    std::string output;  // empty = stdout
};

std::uint64_t pick_budget(const GlobalOpts& g, std::uint64_t fallback) {
    return g.budget != 0 ? g.budget : fallback;
}

RegularityMode parse_mode(const std::string& s) {
    return s == "sampled" ? RegularityMode::sampled : RegularityMode::exact;
}

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) throw std::invalid_argument("empty entry in integer list '" + s + "'");
        out.push_back(std::stoi(tok));
    }
    if (out.empty()) throw std::invalid_argument("empty integer list");
    return out;
}

std::vector<Colour> parse_colour_list(const std::string& s, int colour_count) {
    std::vector<Colour> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(parse_colour(tok, colour_count));
    if (out.empty()) throw std::invalid_argument("empty colour list");
    return out;
}

json rat_json(const Rational& r) { return format_rational(r); }

json stats_json(const SearchStats& s) {
    return json{{"expansions", s.expansions}, {"budget", s.budget}};
}

json cycle_json(const CycleWitness& w) {
    return json{{"colour", colour_name(w.colour)},
                {"length", w.length()},
                {"vertices", w.vertices}};
}

json path_json(const PathWitness& w) {
    return json{{"length", w.length()}, {"vertices", w.vertices}};
}

json matching_json(const ConnectedMatching& m) {
    json edges = json::array();
    for (auto [u, v] : m.edges) edges.push_back(json::array({u, v}));
    return json{{"colour", colour_name(m.colour)},
                {"component", m.component_id},
                {"odd", m.odd},
                {"edges", edges},
                {"vertex_count", m.vertex_count()}};
}

json report_json(const StructureReport& rep) {
    json out = json::array();
    for (const auto& c : rep.conditions) {
        json e{{"name", c.name}, {"ok", c.ok}};
        if (c.edge) e["edge"] = json::array({c.edge->first, c.edge->second});
        if (c.vertex) e["vertex"] = *c.vertex;
        out.push_back(std::move(e));
    }
    return out;
}

json h_witness_json(const HWitness& w) {
    return json{{"kind", "H"},
                {"x1", w.x1},
                {"x2", w.x2},
                {"x1_min", w.x1_min},
                {"x2_min", w.x2_min},
                {"c1", rat_json(w.c1)},
                {"c2", rat_json(w.c2)},
                {"gamma1", colour_name(w.gamma1)},
                {"gamma2", colour_name(w.gamma2)}};
}

json j_witness_json(const JWitness& w) {
    return json{{"kind", "J"},     {"x1", w.x1},
                {"x2", w.x2},      {"x_min", w.x_min},
                {"c", rat_json(w.c)}, {"gamma1", colour_name(w.gamma1)},
                {"gamma2", colour_name(w.gamma2)}};
}

json l_witness_json(const LWitness& w) {
    return json{{"kind", "L"},
                {"x1", w.x1},
                {"x2", w.x2},
                {"y1", w.y1},
                {"y2", w.y2},
                {"x_min", w.x_min},
                {"c", rat_json(w.c)},
                {"gamma1", colour_name(w.gamma1)},
                {"gamma2", colour_name(w.gamma2)},
                {"gamma3", colour_name(w.gamma3)}};
}

VertexSet vertex_set_from(const json& j) { return j.get<VertexSet>(); }

HWitness h_witness_from_json(const json& j, int r) {
    HWitness w;
    w.x1 = vertex_set_from(j.at("x1"));
    w.x2 = vertex_set_from(j.at("x2"));
    w.x1_min = j.value("x1_min", 1);
    w.x2_min = j.value("x2_min", 1);
    w.c1 = parse_rational(j.at("c1").get<std::string>());
    w.c2 = parse_rational(j.at("c2").get<std::string>());
    w.gamma1 = parse_colour(j.at("gamma1").get<std::string>(), r);
    w.gamma2 = parse_colour(j.at("gamma2").get<std::string>(), r);
    return w;
}

JWitness j_witness_from_json(const json& j, int r) {
    JWitness w;
    w.x1 = vertex_set_from(j.at("x1"));
    w.x2 = vertex_set_from(j.at("x2"));
    w.x_min = j.value("x_min", 1);
    w.c = parse_rational(j.at("c").get<std::string>());
    w.gamma1 = parse_colour(j.at("gamma1").get<std::string>(), r);
    w.gamma2 = parse_colour(j.at("gamma2").get<std::string>(), r);
    return w;
}

LWitness l_witness_from_json(const json& j, int r) {
    LWitness w;
    w.x1 = vertex_set_from(j.at("x1"));
    w.x2 = vertex_set_from(j.at("x2"));
    w.y1 = vertex_set_from(j.at("y1"));
    w.y2 = vertex_set_from(j.at("y2"));
    w.x_min = j.value("x_min", 1);
    w.c = parse_rational(j.at("c").get<std::string>());
    w.gamma1 = parse_colour(j.at("gamma1").get<std::string>(), r);
    w.gamma2 = parse_colour(j.at("gamma2").get<std::string>(), r);
    w.gamma3 = parse_colour(j.at("gamma3").get<std::string>(), r);
    return w;
}

json copy_json(const StructureCopy& c) {
    json out{{"support", c.support}, {"note", c.note}};
    if (c.h) out["witness"] = h_witness_json(*c.h);
    if (c.j) out["witness"] = j_witness_json(*c.j);
    return out;
}

json provenance_json(const ReducedProvenance& p) {
    return json{{"eps", rat_json(p.eps)},
                {"xi", rat_json(p.xi)},
                {"mode", p.mode == RegularityMode::exact ? "exact" : "sampled"},
                {"exhaustive", p.exhaustive},
                {"seed", p.seed},
                {"trials", p.trials},
                {"source", p.source}};
}

json edge_pairs_json(const SimpleGraph& g) {
    json out = json::array();
    for (int v = 1; v < g.vertex_count(); ++v)
        for (int u = 0; u < v; ++u)
            if (g.has_edge(u, v)) out.push_back(json::array({u, v}));
    return out;
}

// Accepts either a bare graph JSON or a construct artifact (the graph then
// sits under result.graph), so subcommands chain without unwrapping.
json graph_payload(const std::string& path) {
    json j = load_json_file(path);
    if (j.is_object() && j.contains("result") && j["result"].is_object() &&
        j["result"].contains("graph"))
        return j["result"]["graph"];
    return j;
}

EdgeColouring load_host_colouring(const std::string& path) {
    return edge_colouring_from_json(graph_payload(path));
}

MultiColouredGraph load_host_multi(const std::string& path) {
    return multicoloured_from_json(graph_payload(path));
}

void emit_artifact(const GlobalOpts& g, const std::string& command, bool exhaustive, json result) {
    json artifact{{"tool", "ramsey"},     {"version", kToolVersion},
                  {"command", command},   {"seed", g.seed},
                  {"budget", g.budget},   {"mode", g.mode},
                  {"exhaustive", exhaustive}, {"result", std::move(result)}};
    if (g.output.empty())
        std::cout << artifact.dump(2) << "\n";
    else
        save_json_file(artifact, g.output);
}

// ---- subcommand bodies ------------------------------------------------

int run_construct(const GlobalOpts& g, const std::string& family, const std::string& params) {
    const auto p = parse_int_list(params);
    auto need = [&](std::size_t k) {
        if (p.size() != k)
            throw std::invalid_argument("family '" + family + "' needs " + std::to_string(k) +
                                        " parameters");
    };
    EdgeColouring out;
    if (family == "eoo1") {
        need(3);
        out = eoo_construction_1(p[0], p[1], p[2]);
    } else if (family == "eoo2") {
        need(2);
        out = eoo_construction_2(p[0], p[1]);
    } else if (family == "eoo3") {
        need(2);
        out = eoo_construction_3(p[0], p[1]);
    } else if (family == "even2") {
        need(1);
        out = two_colour_even_extremal(p[0]);
    } else if (family == "oddr") {
        need(2);
        out = odd_r_colour_extremal(p[0], p[1]);
    } else if (family == "evenr") {
        need(2);
        out = r_colour_even_extremal(p[0], p[1]);
    } else if (family == "argmax") {
        need(3);
        out = extremal_for(p[0], p[1], p[2]);
    } else {
        throw std::invalid_argument("unknown family '" + family + "'");
    }
    emit_artifact(g, "construct", true,
                  json{{"family", family},
                       {"params", p},
                       {"vertex_count", out.vertex_count()},
                       {"graph", to_json(out)}});
    return kOk;
}

int run_verify_lb(const GlobalOpts& g, const std::string& input, const std::string& targets) {
    const EdgeColouring host = load_host_colouring(input);
    RamseySpec spec;
    for (int len : parse_int_list(targets)) spec.targets.targets.push_back(CycleTarget{len});
    const Certificate cert =
        verify_lower_bound(host, spec, pick_budget(g, kDefaultBudget));

    json outcomes = json::array();
    bool inconclusive = false;
    for (const auto& oc : cert.outcomes) {
        json e{{"colour", colour_name(oc.colour)},
               {"target_length", oc.target_length},
               {"absence_certified", oc.absence_certified},
               {"stats", stats_json(oc.stats)}};
        if (oc.cycle) e["cycle"] = cycle_json(*oc.cycle);
        if (!oc.absence_certified && !oc.cycle) inconclusive = true;
        outcomes.push_back(std::move(e));
    }
    emit_artifact(g, "verify-lb", !inconclusive,
                  json{{"bound", cert.bound},
                       {"direction", "lower"},
                       {"verified", cert.verified},
                       {"outcomes", outcomes}});
    return inconclusive ? kInconclusive : kOk;
}

int run_detect_cycle(const GlobalOpts& g, const std::string& input, const std::string& colour,
                     int length, int min_length) {
    const MultiColouredGraph host = load_host_multi(input);
    const Colour c = parse_colour(colour, host.colour_count());
    CycleSearchResult res = [&] {
        if (min_length > 0)
            return find_long_cycle(host.colour_class(c), min_length,
                                   pick_budget(g, kDefaultBudget));
        return find_cycle_exact(host, c, length, pick_budget(g, kDefaultBudget));
    }();

    json result{{"colour", colour_name(c)},
                {"target", min_length > 0 ? min_length : length},
                {"exact_length", min_length <= 0},
                {"stats", stats_json(stats_of(res))}};
    int rc = kOk;
    if (found(res)) {
        auto w = std::get<CycleWitness>(res);
        w.colour = c;
        result["status"] = "found";
        result["cycle"] = cycle_json(w);
    } else if (exhausted_absence(res)) {
        result["status"] = "absent";
    } else {
        result["status"] = "inconclusive";
        rc = kInconclusive;
    }
    emit_artifact(g, "detect-cycle", rc == kOk, std::move(result));
    return rc;
}

int run_matching(const GlobalOpts& g, const std::string& input, const std::string& colour,
                 bool odd) {
    const MultiColouredGraph host = load_host_multi(input);
    const Colour c = parse_colour(colour, host.colour_count());
    const auto m = largest_connected_matching(host, c, odd);
    json result{{"colour", colour_name(c)}, {"require_odd", odd}};
    if (m) {
        result["matching"] = matching_json(*m);
    } else {
        result["matching"] = nullptr;
    }
    emit_artifact(g, "matching", true, std::move(result));
    return kOk;
}

int run_decompose(const GlobalOpts& g, const std::string& input, const std::string& colour,
                  int m) {
    const MultiColouredGraph host = load_host_multi(input);
    const Colour c = parse_colour(colour, host.colour_count());
    json result{{"colour", colour_name(c)}, {"m", m}};
    try {
        const Decomposition d = decompose_no_odd_matching(host, c, m);
        const DecompositionReport rep = verify_decomposition(host, c, d);
        result["status"] = "decomposed";
        result["v_prime"] = d.v_prime;
        result["v_doubleprime"] = d.v_doubleprime;
        result["report"] = json{{"v_prime_bipartite", rep.v_prime_bipartite},
                                {"doubleprime_components_odd", rep.doubleprime_components_odd},
                                {"edge_bound", rep.edge_bound},
                                {"no_crossing", rep.no_crossing},
                                {"doubleprime_edges", rep.doubleprime_edges},
                                {"all", rep.all()}};
    } catch (const decomposition_hypothesis_error& e) {
        result["status"] = "hypothesis_violated";
        result["counterexample"] = matching_json(e.counterexample);
    }
    emit_artifact(g, "decompose", true, std::move(result));
    return kOk;
}

int run_structure(const GlobalOpts& g, const std::string& input, const std::string& kind,
                  const std::string& witness_path, int x1_min, int x2_min, const std::string& c1,
                  const std::string& c2, const std::string& gammas) {
    const MultiColouredGraph host = load_host_multi(input);
    const int r = host.colour_count();
    json result{{"kind", kind}};

    if (!witness_path.empty()) {
        const json w = load_json_file(witness_path);
        StructureReport rep;
        if (kind == "H")
            rep = verify_h(host, h_witness_from_json(w, r));
        else if (kind == "J")
            rep = verify_j(host, j_witness_from_json(w, r));
        else if (kind == "L")
            rep = verify_l(host, l_witness_from_json(w, r));
        else
            throw std::invalid_argument("kind must be H, J or L");
        result["verify"] = true;
        result["verified"] = rep.all();
        result["conditions"] = report_json(rep);
        emit_artifact(g, "structure", true, std::move(result));
        return kOk;
    }

    const auto cols = parse_colour_list(gammas, r);
    result["verify"] = false;
    SearchStatus status = SearchStatus::inconclusive;
    if (kind == "H") {
        if (cols.size() != 2) throw std::invalid_argument("H needs two class colours");
        auto res = search_h(host, x1_min, x2_min, parse_rational(c1), parse_rational(c2), cols[0],
                            cols[1], pick_budget(g, 5'000'000));
        status = res.status;
        result["tried"] = res.tried;
        if (res.witness) result["witness"] = h_witness_json(*res.witness);
    } else if (kind == "J") {
        if (cols.size() != 2) throw std::invalid_argument("J needs two class colours");
        auto res = search_j(host, x1_min, parse_rational(c1), cols[0], cols[1],
                            pick_budget(g, 5'000'000));
        status = res.status;
        result["tried"] = res.tried;
        if (res.witness) result["witness"] = j_witness_json(*res.witness);
    } else if (kind == "L") {
        if (cols.size() != 3) throw std::invalid_argument("L needs three class colours");
        auto res = search_l(host, x1_min, parse_rational(c1), cols[0], cols[1], cols[2],
                            pick_budget(g, 50'000'000));
        status = res.status;
        result["tried"] = res.tried;
        if (res.witness) result["witness"] = l_witness_json(*res.witness);
    } else {
        throw std::invalid_argument("kind must be H, J or L");
    }

    result["status"] = status == SearchStatus::found          ? "found"
                       : status == SearchStatus::none_exhausted ? "none"
                                                                : "inconclusive";
    const int rc = status == SearchStatus::inconclusive ? kInconclusive : kOk;
    emit_artifact(g, "structure", status != SearchStatus::inconclusive, std::move(result));
    return rc;
}

int run_classify_d(const GlobalOpts& g, const std::string& input, const std::string& a1,
                   const std::string& a2, const std::string& a3, const std::string& eta,
                   long long k, std::uint64_t budget_per_search) {
    const MultiColouredGraph host = load_host_multi(input);
    TheoremDParams params;
    params.alpha1 = parse_rational(a1);
    params.alpha2 = parse_rational(a2);
    params.alpha3 = parse_rational(a3);
    params.eta = parse_rational(eta);
    params.k = k;
    const TheoremDOutcome out =
        theorem_d_classify(host, params, budget_per_search ? budget_per_search : 300'000);

    json result{{"outcome", out.outcome},
                {"annotations", out.annotations},
                {"searches_exhaustive", out.searches_exhaustive}};
    if (out.matching) result["matching"] = matching_json(*out.matching);
    if (out.w_set) result["w_set"] = *out.w_set;
    if (out.copy_x) result["copy_x"] = copy_json(*out.copy_x);
    if (out.copy_y) result["copy_y"] = copy_json(*out.copy_y);
    if (out.l_witness) result["l_witness"] = l_witness_json(*out.l_witness);
    if (out.gamma) result["gamma"] = colour_name(*out.gamma);

    const bool definitive = out.outcome > 0 || out.searches_exhaustive;
    emit_artifact(g, "classify-d", definitive, std::move(result));
    return definitive ? kOk : kInconclusive;
}

int run_reduce(const GlobalOpts& g, const std::string& input, int K, const std::string& eps,
               const std::string& xi, int exact_limit, std::uint64_t trials) {
    const EdgeColouring host = load_host_colouring(input);
    const Partition pi = equitable_random_partition(host.vertex_count(), K, g.seed);
    RegularityOptions opts;
    if (exact_limit > 0) opts.exact_limit = exact_limit;
    if (trials > 0) opts.trials = trials;
    opts.seed = g.seed;
    const ReducedGraph rg = build_reduced_graph(host, pi, parse_rational(eps), parse_rational(xi),
                                                parse_mode(g.mode), opts);
    emit_artifact(g, "reduce", rg.provenance.exhaustive,
                  json{{"partition", to_json(pi)},
                       {"coloured", to_json(rg.coloured)},
                       {"regular_pairs", edge_pairs_json(rg.regular_pairs)},
                       {"provenance", provenance_json(rg.provenance)}});
    return rg.provenance.exhaustive ? kOk : kInconclusive;
}

int run_blowup(const GlobalOpts& g, const std::string& input, int K, const std::string& eps,
               const std::string& xi, const std::string& colour, int target, int exact_limit,
               std::uint64_t trials) {
    const EdgeColouring host = load_host_colouring(input);
    const Colour c = parse_colour(colour, host.colour_count());
    const Partition pi = equitable_random_partition(host.vertex_count(), K, g.seed);
    RegularityOptions opts;
    if (exact_limit > 0) opts.exact_limit = exact_limit;
    if (trials > 0) opts.trials = trials;
    opts.seed = g.seed;
    const ReducedGraph rg = build_reduced_graph(host, pi, parse_rational(eps), parse_rational(xi),
                                                parse_mode(g.mode), opts);
    const bool odd_target = target % 2 != 0;
    json result{{"colour", colour_name(c)},
                {"target_length", target},
                {"partition", to_json(pi)},
                {"provenance", provenance_json(rg.provenance)}};

    const auto m = largest_connected_matching(rg.coloured, c, odd_target);
    if (!m) {
        result["status"] = "no_reduced_matching";
        emit_artifact(g, "blowup", true, std::move(result));
        return kOk;
    }
    result["reduced_matching"] = matching_json(*m);
    try {
        const BlowupCapacity cap = blow_up_capacity(host, pi, rg, *m, odd_target, c);
        result["capacity"] = json{{"min_length", cap.min_length}, {"max_length", cap.max_length}};
        const CycleWitness w = blow_up_matching_to_cycle(host, pi, rg, *m, target, c);
        result["status"] = "embedded";
        result["cycle"] = cycle_json(w);
        emit_artifact(g, "blowup", true, std::move(result));
        return kOk;
    } catch (const blowup_error& e) {
        result["error"] = e.what();
        if (e.kind == BlowupFailure::embedding) {
            result["status"] = "embedding_failed";
            emit_artifact(g, "blowup", false, std::move(result));
            return kInconclusive;
        }
        result["status"] = e.kind == BlowupFailure::capacity ? "out_of_capacity" : "parity_mismatch";
        emit_artifact(g, "blowup", true, std::move(result));
        return kOk;
    }
}

int run_search_ramsey(const GlobalOpts& g, const std::string& targets, int n_lo, int n_hi,
                      int workers) {
    RamseySpec spec;
    for (int len : parse_int_list(targets)) spec.targets.targets.push_back(CycleTarget{len});
    const RamseyScan scan =
        ramsey_exact(spec, n_lo, n_hi, pick_budget(g, 50'000'000), workers);

    json records = json::array();
    for (const auto& rec : scan.records) {
        json e{{"n", rec.n},
               {"status", rec.status == NStatus::free_colouring ? "free"
                          : rec.status == NStatus::forced       ? "forced"
                                                                : "inconclusive"},
               {"nodes", rec.stats.nodes},
               {"leaves", rec.stats.leaves},
               {"complete", rec.stats.complete},
               {"pruning", rec.stats.pruning}};
        if (rec.witness) e["witness"] = to_json(*rec.witness);
        records.push_back(std::move(e));
    }
    json result{{"targets", parse_int_list(targets)},
                {"n_lo", n_lo},
                {"n_hi", n_hi},
                {"records", records},
                {"complete", scan.complete}};
    if (scan.value) result["value"] = *scan.value;
    if (scan.unresolved_lo) result["unresolved"] = json::array({*scan.unresolved_lo, n_hi});
    emit_artifact(g, "search-ramsey", scan.complete, std::move(result));
    return scan.complete ? kOk : kInconclusive;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact searches, constructions and certificates for cycle Ramsey problems"};
    app.set_version_flag("--version", std::string("ramsey ") + kToolVersion);
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOpts g;
    app.add_option("--seed", g.seed, "RNG seed recorded in every artifact");
    app.add_option("--budget", g.budget, "search budget (0 = per-module default)");
    app.add_option("--mode", g.mode, "regularity checking mode")
        ->check(CLI::IsMember({"exact", "sampled"}));
    app.add_option("-o,--output", g.output, "artifact path (default: stdout)");

    int rc = kOk;

    // construct
    std::string family, params;
    auto* construct = app.add_subcommand("construct", "build an extremal colouring");
    construct->add_option("--family", family, "eoo1|eoo2|eoo3|even2|oddr|evenr|argmax")
        ->required();
    construct->add_option("--params", params, "comma-separated integers")->required();
    construct->callback([&] { rc = run_construct(g, family, params); });

    // verify-lb
    std::string vin, vtargets;
    auto* verify = app.add_subcommand("verify-lb", "certify a colouring avoids its targets");
    verify->add_option("--input", vin, "graph JSON")->required();
    verify->add_option("--targets", vtargets, "target cycle length per colour")->required();
    verify->callback([&] { rc = run_verify_lb(g, vin, vtargets); });

    // detect-cycle
    std::string din, dcolour = "red";
    int dlength = 0, dmin = 0;
    auto* detect = app.add_subcommand("detect-cycle", "exact or long cycle in one colour");
    detect->add_option("--input", din, "graph JSON")->required();
    detect->add_option("--colour", dcolour, "colour name or index");
    detect->add_option("--length", dlength, "exact length sought");
    detect->add_option("--min-length", dmin, "search a cycle of at least this length instead");
    detect->callback([&] {
        if (dlength <= 0 && dmin <= 0)
            throw CLI::ValidationError("detect-cycle", "--length or --min-length required");
        rc = run_detect_cycle(g, din, dcolour, dlength, dmin);
    });

    // matching
    std::string min_, mcolour = "red";
    bool modd = false;
    auto* match = app.add_subcommand("matching", "largest connected matching of a colour");
    match->add_option("--input", min_, "graph JSON")->required();
    match->add_option("--colour", mcolour, "colour name or index");
    match->add_flag("--odd", modd, "restrict to odd (non-bipartite) components");
    match->callback([&] { rc = run_matching(g, min_, mcolour, modd); });

    // decompose
    std::string pin_, pcolour = "red";
    int pm = 3;
    auto* dec = app.add_subcommand("decompose", "bipartite/odd split of a colour class");
    dec->add_option("--input", pin_, "graph JSON")->required();
    dec->add_option("--colour", pcolour, "colour name or index");
    dec->add_option("-m,--matching-bound", pm, "excluded matching vertex count")->required();
    dec->callback([&] { rc = run_decompose(g, pin_, pcolour, pm); });

    // structure
    std::string sin, skind, switness, sc1 = "0", sc2 = "0", sgammas = "red,blue";
    int sx1 = 1, sx2 = 1;
    auto* str = app.add_subcommand("structure", "verify or search H/J/L decompositions");
    str->add_option("--input", sin, "graph JSON")->required();
    str->add_option("--kind", skind, "H, J or L")->required();
    str->add_option("--witness", switness, "witness JSON to verify (omit to search)");
    str->add_option("--x1-min", sx1, "minimum size of X1 (and X2/Y* for J, L)");
    str->add_option("--x2-min", sx2, "minimum size of X2 (H only)");
    str->add_option("--c1", sc1, "almost-complete budget (rational)");
    str->add_option("--c2", sc2, "completeness/sparseness fraction (H only, rational)");
    str->add_option("--gammas", sgammas, "class colours, comma-separated");
    str->callback([&] { rc = run_structure(g, sin, skind, switness, sx1, sx2, sc1, sc2, sgammas); });

    // classify-d
    std::string cin_, ca1, ca2, ca3, ceta;
    long long ck = 1;
    std::uint64_t cbps = 0;
    auto* cls = app.add_subcommand("classify-d", "first matching structural outcome");
    cls->add_option("--input", cin_, "graph JSON")->required();
    cls->add_option("--alpha1", ca1, "rational")->required();
    cls->add_option("--alpha2", ca2, "rational")->required();
    cls->add_option("--alpha3", ca3, "rational")->required();
    cls->add_option("--eta", ceta, "rational")->required();
    cls->add_option("-k,--scale", ck, "scale parameter k");
    cls->add_option("--budget-per-search", cbps, "per-search node budget");
    cls->callback([&] { rc = run_classify_d(g, cin_, ca1, ca2, ca3, ceta, ck, cbps); });

    // reduce
    std::string rin, reps = "1/4", rxi = "1/2";
    int rK = 2, rexact = 0;
    std::uint64_t rtrials = 0;
    auto* red = app.add_subcommand("reduce", "equitable partition and reduced graph");
    red->add_option("--input", rin, "graph JSON")->required();
    red->add_option("-K,--parts", rK, "number of parts")->required();
    red->add_option("--eps", reps, "regularity parameter (rational)");
    red->add_option("--xi", rxi, "density threshold (rational)");
    red->add_option("--exact-limit", rexact, "largest side size checked exhaustively");
    red->add_option("--trials", rtrials, "sampled-mode trial count");
    red->callback([&] { rc = run_reduce(g, rin, rK, reps, rxi, rexact, rtrials); });

    // blowup
    std::string bin_, beps = "1/4", bxi = "1/2", bcolour = "red";
    int bK = 2, btarget = 0, bexact = 0;
    std::uint64_t btrials = 0;
    auto* blow = app.add_subcommand("blowup", "lift a reduced matching to a host cycle");
    blow->add_option("--input", bin_, "graph JSON")->required();
    blow->add_option("-K,--parts", bK, "number of parts")->required();
    blow->add_option("--eps", beps, "regularity parameter (rational)");
    blow->add_option("--xi", bxi, "density threshold (rational)");
    blow->add_option("--colour", bcolour, "colour name or index");
    blow->add_option("--target", btarget, "cycle length to realise")->required();
    blow->add_option("--exact-limit", bexact, "largest side size checked exhaustively");
    blow->add_option("--trials", btrials, "sampled-mode trial count");
    blow->callback(
        [&] { rc = run_blowup(g, bin_, bK, beps, bxi, bcolour, btarget, bexact, btrials); });

    // search-ramsey
    std::string qtargets;
    int qlo = 3, qhi = 3, qworkers = 0;
    auto* sr = app.add_subcommand("search-ramsey", "smallest forced complete-graph order");
    sr->add_option("--targets", qtargets, "target cycle length per colour")->required();
    sr->add_option("--n-lo", qlo, "first order to scan")->required();
    sr->add_option("--n-hi", qhi, "last order to scan")->required();
    sr->add_option("--workers", qworkers, "worker threads (0 = RAMSEY_WORKERS or 1)");
    sr->callback([&] { rc = run_search_ramsey(g, qtargets, qlo, qhi, qworkers); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const hypothesis_error& e) {
        std::cerr << json{{"error", "hypothesis"}, {"message", e.what()}}.dump() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << json{{"error", "runtime"}, {"message", e.what()}}.dump() << "\n";
        return 1;
    }
    return rc;
}
