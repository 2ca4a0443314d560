#pragma once

#include <utility>

#include "explab/graph.hpp"

namespace explab {

// Koucky's transformation to an edge-symmetric 3-regular graph: every vertex
// v of degree d becomes a cycle of 3d subvertices (v,0)..(v,3d-1) whose cycle
// edges carry port 0 at (v,i) and port 1 at (v,i+1 mod 3d); every original
// edge {v,w} with ports i,j becomes the three cross edges
// {(v,i),(w,j)}, {(v,i+d_v),(w,j+d_w)}, {(v,i+2d_v),(w,j+2d_w)}, all labeled 2.
// Subvertex (v,a) gets id map_start[v] + a.
inline std::pair<PortLabeledGraph, VertexMap> koucky_regularize(const PortLabeledGraph& g) {
    ValidationReport rep = validate(g);
    require(rep.ok(), "koucky_regularize: input graph is invalid: " +
                          (rep.violations.empty() ? std::string() : rep.violations.front().detail));
    auto deg = g.degrees();
    for (Vertex v = 0; v < g.vertex_count; ++v)
        require(deg[v] >= 2, "koucky_regularize: vertex " + std::to_string(v) + " has degree < 2");

    VertexMap map;
    map.kind = VertexMap::Kind::koucky;
    map.forward.resize(g.vertex_count);
    std::vector<int> start(g.vertex_count + 1, 0);
    for (Vertex v = 0; v < g.vertex_count; ++v)
        start[v + 1] = start[v] + 3 * deg[v];

    PortLabeledGraph out;
    out.vertex_count = start[g.vertex_count];
    for (Vertex v = 0; v < g.vertex_count; ++v) {
        int m = 3 * deg[v];
        map.forward[v].reserve(m);
        for (int a = 0; a < m; ++a)
            map.forward[v].push_back(start[v] + a);
        for (int a = 0; a < m; ++a)
            out.add_edge(start[v] + a, start[v] + (a + 1) % m, 0, 1);
    }
    for (const Edge& e : g.edges) {
        for (int t = 0; t < 3; ++t) {
            int a = e.pu + t * deg[e.u];
            int b = e.pv + t * deg[e.v];
            out.add_edge(start[e.u] + a, start[e.v] + b, 2, 2);
        }
    }
    out.normalize();
    return {std::move(out), std::move(map)};
}

// 3-regular extension: two copies of g plus, for every degree-2 vertex v, the
// edge {v, v'} labeled with the unique label in {0,1,2} missing at v. Input
// must have degrees in {2,3}, locally distinct labels in {0,1,2}, and the
// same label at both endpoints of every edge. Copy 0 keeps the original ids;
// vertex v of copy 1 is v + n.
inline std::pair<PortLabeledGraph, VertexMap> regular_extension(const PortLabeledGraph& g) {
    auto deg = g.degrees();
    std::vector<unsigned> label_mask(g.vertex_count, 0);
    for (Vertex v = 0; v < g.vertex_count; ++v)
        require(deg[v] == 2 || deg[v] == 3,
                "regular_extension: vertex " + std::to_string(v) + " has degree " + std::to_string(deg[v]));
    for (const Edge& e : g.edges) {
        require(e.pu == e.pv && e.pu >= 0 && e.pu <= 2,
                "regular_extension: edge labels must be symmetric and in {0,1,2}");
        require(e.u != e.v, "regular_extension: self-loop");
        unsigned bit = 1u << e.pu;
        require(!(label_mask[e.u] & bit) && !(label_mask[e.v] & bit),
                "regular_extension: duplicate label " + std::to_string(e.pu) + " at an endpoint");
        label_mask[e.u] |= bit;
        label_mask[e.v] |= bit;
    }

    int n = g.vertex_count;
    PortLabeledGraph out;
    out.vertex_count = 2 * n;
    for (const Edge& e : g.edges) {
        out.add_edge(e.u, e.v, e.pu, e.pv);
        out.add_edge(e.u + n, e.v + n, e.pu, e.pv);
    }
    for (Vertex v = 0; v < n; ++v) {
        if (deg[v] == 2) {
            unsigned missing = 7u & ~label_mask[v];
            require(missing == 1u || missing == 2u || missing == 4u,
                    "regular_extension: missing label at vertex " + std::to_string(v) + " is not unique");
            Port l = missing == 1u ? 0 : missing == 2u ? 1 : 2;
            out.add_edge(v, v + n, l, l);
        }
    }
    out.normalize();

    VertexMap map;
    map.kind = VertexMap::Kind::extension;
    map.forward.resize(n);
    for (Vertex v = 0; v < n; ++v)
        map.forward[v] = {v, v + n};
    return {std::move(out), std::move(map)};
}

} // namespace explab
