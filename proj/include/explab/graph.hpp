#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "explab/common.hpp"

namespace explab {

using Vertex = int;
using Port = int;

// One undirected edge with a port number at each endpoint. Stored with u <= v
// in canonical form (endpoints swapped together with their ports).
struct Edge {
    Vertex u = 0;
    Vertex v = 0;
    Port pu = 0;
    Port pv = 0;

    Edge() = default;
    Edge(Vertex u_, Vertex v_, Port pu_, Port pv_) : u(u_), v(v_), pu(pu_), pv(pv_) {}

    Edge canonical() const { return u <= v ? *this : Edge{v, u, pv, pu}; }

    friend bool operator==(const Edge&, const Edge&) = default;
};

inline bool edge_key_less(const Edge& a, const Edge& b) {
    return std::tuple(std::min(a.u, a.v), std::max(a.u, a.v), a.pu, a.pv) <
           std::tuple(std::min(b.u, b.v), std::max(b.u, b.v), b.pu, b.pv);
}

// Undirected graph with per-endpoint port numbers. Vertex ids 0..n-1 exist
// for the harness only; they are never visible to agents. Construction is
// unchecked; validate() reports invariant violations as data.
struct PortLabeledGraph {
    int vertex_count = 0;
    std::vector<Edge> edges;

    PortLabeledGraph() = default;
    PortLabeledGraph(int n, std::vector<Edge> e) : vertex_count(n), edges(std::move(e)) { normalize(); }

    void add_edge(Vertex u, Vertex v, Port pu, Port pv) { edges.push_back(Edge{u, v, pu, pv}.canonical()); }

    // Canonical form: endpoints ordered within each edge, edge list sorted.
    void normalize() {
        for (Edge& e : edges)
            e = e.canonical();
        std::sort(edges.begin(), edges.end(), edge_key_less);
    }

    std::vector<int> degrees() const {
        std::vector<int> deg(vertex_count, 0);
        for (const Edge& e : edges) {
            ++deg[e.u];
            ++deg[e.v];
        }
        return deg;
    }

    friend bool operator==(const PortLabeledGraph&, const PortLabeledGraph&) = default;
};

// Port-indexed adjacency: at(v, port) -> (neighbor, port at neighbor, edge id).
class Adjacency {
  public:
    struct Arc {
        Vertex to = -1;
        Port back = -1;
        int edge = -1;
    };

    explicit Adjacency(const PortLabeledGraph& g) : degree_(g.vertex_count, 0) {
        std::vector<Port> max_port(g.vertex_count, -1);
        for (const Edge& e : g.edges) {
            require(e.u >= 0 && e.u < g.vertex_count && e.v >= 0 && e.v < g.vertex_count,
                    "adjacency: vertex id out of range");
            require(e.u != e.v, "adjacency: self-loop");
            require(e.pu >= 0 && e.pv >= 0, "adjacency: negative port");
            max_port[e.u] = std::max(max_port[e.u], e.pu);
            max_port[e.v] = std::max(max_port[e.v], e.pv);
            ++degree_[e.u];
            ++degree_[e.v];
        }
        offset_.resize(g.vertex_count + 1, 0);
        for (Vertex v = 0; v < g.vertex_count; ++v)
            offset_[v + 1] = offset_[v] + (max_port[v] + 1);
        arcs_.assign(offset_.back(), Arc{});
        for (int id = 0; id < static_cast<int>(g.edges.size()); ++id) {
            const Edge& e = g.edges[id];
            Arc& a = arcs_[offset_[e.u] + e.pu];
            require(a.to < 0, "adjacency: duplicate port at vertex " + std::to_string(e.u));
            a = Arc{e.v, e.pv, id};
            Arc& b = arcs_[offset_[e.v] + e.pv];
            require(b.to < 0, "adjacency: duplicate port at vertex " + std::to_string(e.v));
            b = Arc{e.u, e.pu, id};
        }
    }

    int degree(Vertex v) const { return degree_[v]; }

    // Number of port slots at v (max port + 1); equals degree iff ports are contiguous.
    int port_slots(Vertex v) const { return static_cast<int>(offset_[v + 1] - offset_[v]); }

    const Arc& at(Vertex v, Port p) const {
        require(p >= 0 && p < port_slots(v) && arcs_[offset_[v] + p].to >= 0,
                "no edge with port " + std::to_string(p) + " at vertex " + std::to_string(v));
        return arcs_[offset_[v] + p];
    }

    bool has_port(Vertex v, Port p) const {
        return p >= 0 && p < port_slots(v) && arcs_[offset_[v] + p].to >= 0;
    }

    int vertex_count() const { return static_cast<int>(degree_.size()); }

  private:
    std::vector<int> degree_;
    std::vector<std::size_t> offset_;
    std::vector<Arc> arcs_;
};

inline bool is_connected(const PortLabeledGraph& g) {
    if (g.vertex_count <= 1)
        return true;
    std::vector<std::vector<Vertex>> nbr(g.vertex_count);
    for (const Edge& e : g.edges) {
        nbr[e.u].push_back(e.v);
        nbr[e.v].push_back(e.u);
    }
    std::vector<char> seen(g.vertex_count, 0);
    std::vector<Vertex> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (Vertex w : nbr[v])
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                stack.push_back(w);
            }
    }
    return count == g.vertex_count;
}

struct Violation {
    std::string rule;
    std::string detail;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
};

// Checks the full data-model invariants: ids in range, no self-loops, the
// ports at every vertex are exactly {0..deg-1}, and the graph is connected.
inline ValidationReport validate(const PortLabeledGraph& g) {
    ValidationReport rep;
    auto bad = [&rep](const std::string& rule, const std::string& detail) {
        rep.violations.push_back({rule, detail});
    };
    if (g.vertex_count < 0)
        bad("vertex_count", "negative vertex count");
    bool ids_ok = true;
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        const Edge& e = g.edges[i];
        if (e.u < 0 || e.u >= g.vertex_count || e.v < 0 || e.v >= g.vertex_count) {
            bad("vertex-range", "edge " + std::to_string(i) + " references a vertex outside 0.." +
                                    std::to_string(g.vertex_count - 1));
            ids_ok = false;
        }
        if (e.u == e.v)
            bad("self-loop", "edge " + std::to_string(i) + " at vertex " + std::to_string(e.u));
    }
    if (!ids_ok)
        return rep;

    std::vector<std::vector<Port>> ports(g.vertex_count);
    for (const Edge& e : g.edges) {
        if (e.u != e.v) {
            ports[e.u].push_back(e.pu);
            ports[e.v].push_back(e.pv);
        }
    }
    for (Vertex v = 0; v < g.vertex_count; ++v) {
        std::vector<Port> p = ports[v];
        std::sort(p.begin(), p.end());
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (i > 0 && p[i] == p[i - 1])
                bad("duplicate-port", "duplicate port " + std::to_string(p[i]) + " at vertex " + std::to_string(v));
            else if (p[i] != static_cast<Port>(i))
                bad("port-range",
                    "vertex " + std::to_string(v) + " has port " + std::to_string(p[i]) + " but degree " +
                        std::to_string(p.size()));
        }
    }
    if (!is_connected(g))
        bad("disconnected", "graph is not connected");
    return rep;
}

// Every vertex has degree 3 and both endpoints of every edge carry the same
// label in {0,1,2}.
inline bool is_edge_symmetric_3regular(const PortLabeledGraph& g, std::string* why = nullptr) {
    auto deg = g.degrees();
    for (Vertex v = 0; v < g.vertex_count; ++v)
        if (deg[v] != 3) {
            if (why)
                *why = "vertex " + std::to_string(v) + " has degree " + std::to_string(deg[v]);
            return false;
        }
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        const Edge& e = g.edges[i];
        if (e.pu != e.pv || e.pu < 0 || e.pu > 2) {
            if (why)
                *why = "edge " + std::to_string(i) + " labels (" + std::to_string(e.pu) + "," +
                       std::to_string(e.pv) + ") are not a symmetric label in {0,1,2}";
            return false;
        }
    }
    return true;
}

// Maps original vertices to their image vertices under a graph transformation.
struct VertexMap {
    enum class Kind { koucky, extension, gadget };
    Kind kind = Kind::koucky;
    std::vector<std::vector<Vertex>> forward;
};

} // namespace explab
