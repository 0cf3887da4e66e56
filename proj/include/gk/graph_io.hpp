#ifndef GK_GRAPH_IO_HPP
#define GK_GRAPH_IO_HPP

// DOT and JSON serialization for PrimeGraph.  Both formats are deterministic
// (vertices sorted, edge endpoints sorted) so outputs are byte-stable and the
// JSON form round-trips exactly.

#include <string>

#include <nlohmann/json.hpp>

#include "gk/graph.hpp"

namespace gk {

using json = nlohmann::json;

inline std::string to_dot(const PrimeGraph& g, const std::string& name = "G") {
    std::string out = "graph " + name + " {\n";
    for (const Vertex& v : g.vertices()) out += "  \"" + v.label() + "\";\n";
    for (const Edge& e : g.edges())
        out += "  \"" + e.first.label() + "\" -- \"" + e.second.label() + "\";\n";
    out += "}\n";
    return out;
}

inline json graph_to_json(const PrimeGraph& g) {
    json j;
    j["vertices"] = json::array();
    for (const Vertex& v : g.vertices()) j["vertices"].push_back(v.label());
    j["edges"] = json::array();
    for (const Edge& e : g.edges())
        j["edges"].push_back(json::array({e.first.label(), e.second.label()}));
    return j;
}

inline PrimeGraph graph_from_json(const json& j) {
    PrimeGraph g;
    if (!j.contains("vertices") || !j.contains("edges"))
        throw ParseError("graph_from_json: missing vertices/edges");
    for (const auto& v : j.at("vertices"))
        g = g.with_vertex(Vertex::parse(v.get<std::string>()));
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) throw ParseError("graph_from_json: bad edge");
        Vertex a = Vertex::parse(e[0].get<std::string>());
        Vertex b = Vertex::parse(e[1].get<std::string>());
        if (!g.has_vertex(a) || !g.has_vertex(b))
            throw ParseError("graph_from_json: edge endpoint not a vertex");
        g = g.with_edge(a, b);
    }
    return g;
}

inline json invariants_to_json(const GraphInvariants& inv) {
    json j;
    j["vertex_count"] = inv.vertex_count;
    j["edge_count"] = inv.edge_count;
    j["component_count"] = inv.component_count;
    j["independence_number"] = inv.independence_number;
    j["t_at_two"] = inv.t_at_two;
    j["clique_number"] = inv.clique_number;
    j["isolated_vertex_count"] = inv.isolated_vertex_count;
    j["degree_sequence"] = inv.degree_sequence;
    return j;
}

} // namespace gk

#endif // GK_GRAPH_IO_HPP
