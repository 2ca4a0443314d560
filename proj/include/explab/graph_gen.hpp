#pragma once

#include <map>
#include <set>
#include <string>

#include "explab/graph.hpp"

namespace explab {

enum class GenKind { k4, prism, random_3regular, diamond_gadget, random_general };

inline GenKind gen_kind_from_string(const std::string& s) {
    if (s == "k4")
        return GenKind::k4;
    if (s == "prism")
        return GenKind::prism;
    if (s == "random_3regular")
        return GenKind::random_3regular;
    if (s == "diamond_gadget")
        return GenKind::diamond_gadget;
    if (s == "random_general")
        return GenKind::random_general;
    fail("unknown graph kind: " + s);
}

struct GenParams {
    int n = 0;
    int extra_edges = 0;   // random_general: edges beyond the spanning tree
    int missing_label = 0; // diamond_gadget: label absent at the two degree-2 vertices
};

// K4 labeled by its three perfect matchings; edge-symmetric.
inline PortLabeledGraph make_k4() {
    PortLabeledGraph g;
    g.vertex_count = 4;
    g.add_edge(0, 1, 0, 0);
    g.add_edge(2, 3, 0, 0);
    g.add_edge(0, 2, 1, 1);
    g.add_edge(1, 3, 1, 1);
    g.add_edge(0, 3, 2, 2);
    g.add_edge(1, 2, 2, 2);
    g.normalize();
    return g;
}

// Triangular prism with a proper edge-symmetric 3-labeling.
inline PortLabeledGraph make_prism() {
    PortLabeledGraph g;
    g.vertex_count = 6;
    g.add_edge(0, 1, 0, 0);
    g.add_edge(1, 2, 1, 1);
    g.add_edge(2, 0, 2, 2);
    g.add_edge(3, 4, 0, 0);
    g.add_edge(4, 5, 1, 1);
    g.add_edge(5, 3, 2, 2);
    g.add_edge(0, 3, 1, 1);
    g.add_edge(1, 4, 2, 2);
    g.add_edge(2, 5, 0, 0);
    g.normalize();
    return g;
}

// K4 minus one edge. Vertices 0,1 have degree 3; 2,3 have degree 2 and carry
// the two labels other than `missing`, so an attachment edge labeled
// `missing` stays locally distinct.
inline PortLabeledGraph make_diamond(int missing = 0) {
    require(missing >= 0 && missing <= 2, "diamond: missing label must be in {0,1,2}");
    int a = missing == 0 ? 1 : 0;
    int b = missing == 2 ? 1 : 2;
    PortLabeledGraph g;
    g.vertex_count = 4;
    g.add_edge(0, 1, missing, missing);
    g.add_edge(0, 2, a, a);
    g.add_edge(1, 2, b, b);
    g.add_edge(0, 3, b, b);
    g.add_edge(1, 3, a, a);
    g.normalize();
    return g;
}

namespace detail {

inline std::vector<std::pair<Vertex, Vertex>> random_matching(int n, Rng& rng) {
    std::vector<Vertex> v(n);
    for (int i = 0; i < n; ++i)
        v[i] = i;
    rng.shuffle(v);
    std::vector<std::pair<Vertex, Vertex>> m;
    for (int i = 0; i < n; i += 2)
        m.emplace_back(std::min(v[i], v[i + 1]), std::max(v[i], v[i + 1]));
    return m;
}

} // namespace detail

// Simple connected 3-regular graph on n vertices as a union of three perfect
// matchings labeled 0,1,2; the labeling is edge-symmetric by construction.
inline PortLabeledGraph make_random_3regular(int n, std::uint64_t seed) {
    require(n >= 4 && n % 2 == 0, "random_3regular: n must be even and >= 4");
    Rng rng(seed);
    for (int attempt = 0; attempt < 100000; ++attempt) {
        auto m0 = detail::random_matching(n, rng);
        auto m1 = detail::random_matching(n, rng);
        auto m2 = detail::random_matching(n, rng);
        std::set<std::pair<Vertex, Vertex>> used;
        bool simple = true;
        for (const auto* m : {&m0, &m1, &m2})
            for (const auto& e : *m)
                if (!used.insert(e).second)
                    simple = false;
        if (!simple)
            continue;
        PortLabeledGraph g;
        g.vertex_count = n;
        for (const auto& e : m0)
            g.add_edge(e.first, e.second, 0, 0);
        for (const auto& e : m1)
            g.add_edge(e.first, e.second, 1, 1);
        for (const auto& e : m2)
            g.add_edge(e.first, e.second, 2, 2);
        g.normalize();
        if (is_connected(g))
            return g;
    }
    fail("random_3regular: no connected simple instance found within attempt budget");
}

// Connected simple graph: random recursive tree plus extra random edges.
// Ports are assigned smallest-first scanning edges in canonical order.
inline PortLabeledGraph make_random_general(int n, int extra_edges, std::uint64_t seed) {
    require(n >= 1, "random_general: n must be positive");
    Rng rng(seed);
    std::set<std::pair<Vertex, Vertex>> used;
    for (Vertex v = 1; v < n; ++v) {
        Vertex u = static_cast<Vertex>(rng.below(v));
        used.insert({std::min(u, v), std::max(u, v)});
    }
    long long max_edges = static_cast<long long>(n) * (n - 1) / 2;
    int want = static_cast<int>(std::min<long long>(max_edges, static_cast<long long>(used.size()) + extra_edges));
    int guard = 0;
    while (static_cast<int>(used.size()) < want && guard < 1000000) {
        Vertex u = static_cast<Vertex>(rng.below(n));
        Vertex v = static_cast<Vertex>(rng.below(n));
        ++guard;
        if (u == v)
            continue;
        used.insert({std::min(u, v), std::max(u, v)});
    }
    PortLabeledGraph g;
    g.vertex_count = n;
    std::vector<Port> next_port(n, 0);
    for (const auto& [u, v] : used)
        g.add_edge(u, v, next_port[u]++, next_port[v]++);
    g.normalize();
    return g;
}

// Pure function of (kind, params, seed); output always passes validate().
inline PortLabeledGraph generate(GenKind kind, const GenParams& params, std::uint64_t seed) {
    switch (kind) {
    case GenKind::k4:
        return make_k4();
    case GenKind::prism:
        return make_prism();
    case GenKind::diamond_gadget:
        return make_diamond(params.missing_label);
    case GenKind::random_3regular:
        return make_random_3regular(params.n, seed);
    case GenKind::random_general:
        return make_random_general(params.n, params.extra_edges, seed);
    }
    fail("generate: unreachable");
}

} // namespace explab
