#pragma once

#include <string>

#include <json.hpp>

#include "explab/graph.hpp"

namespace explab {

// Canonical graph document: {"edges":[{"pu":..,"pv":..,"u":..,"v":..},...],
// "vertex_count":n} with the edge array sorted by (min(u,v), max(u,v), pu).
// serialize(parse(doc)) == doc for canonical documents.
inline std::string serialize(const PortLabeledGraph& g) {
    PortLabeledGraph c = g;
    c.normalize();
    nlohmann::json j;
    j["vertex_count"] = c.vertex_count;
    j["edges"] = nlohmann::json::array();
    for (const Edge& e : c.edges)
        j["edges"].push_back({{"u", e.u}, {"v", e.v}, {"pu", e.pu}, {"pv", e.pv}});
    return j.dump(2) + "\n";
}

// Parses and checks the local invariants (ids in range, no self-loops,
// per-vertex ports exactly {0..deg-1}). Connectivity is not required here;
// validate() flags it.
inline PortLabeledGraph parse_graph(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& err) {
        fail(std::string("graph document: ") + err.what());
    }
    require(j.is_object(), "graph document: top level must be an object");
    require(j.contains("vertex_count") && j["vertex_count"].is_number_integer(),
            "graph document: missing integer field 'vertex_count'");
    require(j.contains("edges") && j["edges"].is_array(), "graph document: missing array field 'edges'");

    PortLabeledGraph g;
    g.vertex_count = j["vertex_count"].get<int>();
    require(g.vertex_count >= 0, "graph document: vertex_count must be non-negative");
    int idx = 0;
    for (const auto& je : j["edges"]) {
        std::string where = "edge #" + std::to_string(idx);
        require(je.is_object(), "graph document: " + where + " is not an object");
        for (const char* k : {"u", "v", "pu", "pv"})
            require(je.contains(k) && je[k].is_number_integer(),
                    "graph document: " + where + " missing integer field '" + k + "'");
        Edge e{je["u"].get<int>(), je["v"].get<int>(), je["pu"].get<int>(), je["pv"].get<int>()};
        require(e.u >= 0 && e.u < g.vertex_count && e.v >= 0 && e.v < g.vertex_count,
                "graph document: " + where + " references a vertex outside 0.." +
                    std::to_string(g.vertex_count - 1));
        require(e.u != e.v, "graph document: " + where + " is a self-loop at vertex " + std::to_string(e.u));
        require(e.pu >= 0 && e.pv >= 0, "graph document: " + where + " has a negative port");
        g.edges.push_back(e);
        ++idx;
    }
    g.normalize();

    // Local port invariant with the offending vertex named.
    std::vector<std::vector<Port>> ports(g.vertex_count);
    for (const Edge& e : g.edges) {
        ports[e.u].push_back(e.pu);
        ports[e.v].push_back(e.pv);
    }
    for (Vertex v = 0; v < g.vertex_count; ++v) {
        std::vector<Port> p = ports[v];
        std::sort(p.begin(), p.end());
        for (std::size_t i = 0; i < p.size(); ++i) {
            require(i == 0 || p[i] != p[i - 1],
                    "graph document: duplicate port " + std::to_string(p[i]) + " at vertex " + std::to_string(v));
            require(p[i] == static_cast<Port>(i), "graph document: vertex " + std::to_string(v) + " has port " +
                                                      std::to_string(p[i]) + " but degree " +
                                                      std::to_string(p.size()));
        }
    }
    return g;
}

inline std::string to_dot(const PortLabeledGraph& g, const std::string& name = "g") {
    std::string out = "graph " + name + " {\n";
    for (Vertex v = 0; v < g.vertex_count; ++v)
        out += "  " + std::to_string(v) + ";\n";
    for (const Edge& e : g.edges)
        out += "  " + std::to_string(e.u) + " -- " + std::to_string(e.v) + " [taillabel=\"" +
               std::to_string(e.pu) + "\", headlabel=\"" + std::to_string(e.pv) + "\"];\n";
    out += "}\n";
    return out;
}

} // namespace explab
