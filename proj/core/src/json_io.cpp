#include "ramsey/json_io.hpp"

#include <fstream>
#include <ostream>
#include <stdexcept>

namespace ramsey {

using nlohmann::json;

json to_json(const EdgeColouring& g) {
    json edges = json::array();
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v = u + 1; v < g.vertex_count(); ++v)
            edges.push_back({u, v, {g.colour_of(u, v).index}});
    return json{{"n", g.vertex_count()}, {"r", g.colour_count()}, {"edges", edges}};
}

json to_json(const MultiColouredGraph& g) {
    json edges = json::array();
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v = u + 1; v < g.vertex_count(); ++v) {
            ColourSet cs = g.colours_of(u, v);
            if (cs.empty()) continue;
            json cl = json::array();
            for (Colour c : cs.to_vector()) cl.push_back(c.index);
            edges.push_back({u, v, cl});
        }
    return json{{"n", g.vertex_count()}, {"r", g.colour_count()}, {"edges", edges}};
}

json to_json(const Partition& pi) {
    return json{{"v0", pi.v0}, {"parts", pi.parts}};
}

namespace {

void check_graph_schema(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("r") || !j.contains("edges"))
        throw std::invalid_argument("graph JSON must be an object with n, r, edges");
    if (!j["n"].is_number_integer() || !j["r"].is_number_integer() || !j["edges"].is_array())
        throw std::invalid_argument("graph JSON: n and r must be integers, edges an array");
}

struct RawEdge {
    int u, v;
    std::vector<int> colours;
};

RawEdge parse_edge(const json& e, int n, int r) {
    if (!e.is_array() || e.size() != 3 || !e[0].is_number_integer() ||
        !e[1].is_number_integer() || !e[2].is_array())
        throw std::invalid_argument("graph JSON: each edge must be [u, v, [colours]]");
    RawEdge re{e[0].get<int>(), e[1].get<int>(), {}};
    if (re.u < 0 || re.u >= n || re.v < 0 || re.v >= n || re.u == re.v)
        throw std::invalid_argument("graph JSON: bad edge endpoints [" + std::to_string(re.u) +
                                    ", " + std::to_string(re.v) + "]");
    for (const auto& c : e[2]) {
        if (!c.is_number_integer())
            throw std::invalid_argument("graph JSON: colours must be integers");
        int ci = c.get<int>();
        if (ci < 0 || ci >= r) throw std::invalid_argument("graph JSON: colour out of range");
        re.colours.push_back(ci);
    }
    return re;
}

}  // namespace

EdgeColouring edge_colouring_from_json(const json& j) {
    check_graph_schema(j);
    int n = j["n"].get<int>(), r = j["r"].get<int>();
    EdgeColouring g(n, r);
    for (const auto& e : j["edges"]) {
        RawEdge re = parse_edge(e, n, r);
        if (re.colours.size() != 1)
            throw std::invalid_argument("edge colouring JSON: each edge needs exactly one colour");
        if (g.is_set(re.u, re.v))
            throw std::invalid_argument("edge colouring JSON: duplicate pair");
        g.set(re.u, re.v, Colour{re.colours[0]});
    }
    if (auto miss = g.first_unset())
        throw std::invalid_argument("edge colouring JSON: pair {" + std::to_string(miss->first) +
                                    "," + std::to_string(miss->second) + "} missing (colouring must be total)");
    return g;
}

MultiColouredGraph multicoloured_from_json(const json& j) {
    check_graph_schema(j);
    int n = j["n"].get<int>(), r = j["r"].get<int>();
    MultiColouredGraph g(n, r);
    for (const auto& e : j["edges"]) {
        RawEdge re = parse_edge(e, n, r);
        if (re.colours.empty())
            throw std::invalid_argument("multicoloured JSON: present edge needs >= 1 colour");
        if (g.has_edge(re.u, re.v))
            throw std::invalid_argument("multicoloured JSON: duplicate pair");
        for (int c : re.colours) g.add_colour(re.u, re.v, Colour{c});
    }
    return g;
}

Partition partition_from_json(const json& j) {
    if (!j.is_object() || !j.contains("v0") || !j.contains("parts"))
        throw std::invalid_argument("partition JSON must contain v0 and parts");
    Partition pi;
    pi.v0 = j["v0"].get<VertexSet>();
    pi.parts = j["parts"].get<std::vector<VertexSet>>();
    return pi;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw std::runtime_error("parse error in " + path + ": " + e.what());
    }
}

void save_json_file(const json& j, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << j.dump(2) << "\n";
}

EdgeColouring load_edge_colouring(const std::string& path) {
    return edge_colouring_from_json(load_json_file(path));
}

MultiColouredGraph load_multicoloured(const std::string& path) {
    return multicoloured_from_json(load_json_file(path));
}

void write_edge_list(std::ostream& os, const SimpleGraph& g) {
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v : g.neighbours(u))
            if (v > u) os << u << " " << v << "\n";
}

}  // namespace ramsey
