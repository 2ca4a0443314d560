#pragma once

#include <functional>
#include <string>
#include <vector>

#include "explab/graph.hpp"
#include "explab/graph_gen.hpp"
#include "explab/graph_io.hpp"

namespace explab {

// A matching as a fixed-point-free involution given by sorted pairs.
using Matching = std::vector<std::pair<Vertex, Vertex>>;

inline void for_each_perfect_matching(int n, const std::function<void(const Matching&)>& fn) {
    Matching acc;
    std::vector<char> used(n, 0);
    std::function<void()> rec = [&]() {
        int a = -1;
        for (int i = 0; i < n; ++i)
            if (!used[i]) {
                a = i;
                break;
            }
        if (a < 0) {
            fn(acc);
            return;
        }
        used[a] = 1;
        for (int b = a + 1; b < n; ++b) {
            if (used[b])
                continue;
            used[b] = 1;
            acc.emplace_back(a, b);
            rec();
            acc.pop_back();
            used[b] = 0;
        }
        used[a] = 0;
    };
    rec();
}

inline Matching standard_matching(int n) {
    Matching m;
    for (int i = 0; i < n; i += 2)
        m.emplace_back(i, i + 1);
    return m;
}

inline PortLabeledGraph graph_from_matchings(int n, const Matching& m0, const Matching& m1, const Matching& m2) {
    PortLabeledGraph g;
    g.vertex_count = n;
    for (const auto& e : m0)
        g.add_edge(e.first, e.second, 0, 0);
    for (const auto& e : m1)
        g.add_edge(e.first, e.second, 1, 1);
    for (const auto& e : m2)
        g.add_edge(e.first, e.second, 2, 2);
    g.normalize();
    return g;
}

// Streaming enumeration of the connected edge-symmetric 3-regular family on
// n vertices: matching 0 is pinned to {(0,1),(2,3),...} and the label-1/2
// matchings range over all fixed-point-free involutions with m1 <= m2.
// Parallel edges arise (they are legal); every connected edge-symmetric
// cubic multigraph on n vertices appears up to isomorphism.
inline void for_each_es3r(int n, const std::function<void(const PortLabeledGraph&)>& fn) {
    require(n >= 2 && n % 2 == 0, "es3r enumeration: n must be even and >= 2");
    Matching m0 = standard_matching(n);
    std::vector<Matching> all;
    for_each_perfect_matching(n, [&](const Matching& m) { all.push_back(m); });
    for (std::size_t i = 0; i < all.size(); ++i) {
        for (std::size_t j = i; j < all.size(); ++j) {
            PortLabeledGraph g = graph_from_matchings(n, m0, all[i], all[j]);
            if (is_connected(g))
                fn(g);
        }
    }
}

inline std::vector<PortLabeledGraph> es3r_graphs(int n) {
    require(n <= 8, "es3r_graphs: materialized enumeration is limited to n <= 8");
    std::vector<PortLabeledGraph> out;
    for_each_es3r(n, [&](const PortLabeledGraph& g) { out.push_back(g); });
    return out;
}

// All labeled trees on n vertices via Pruefer sequences, ports assigned
// smallest-first in canonical edge order.
inline std::vector<PortLabeledGraph> tree_graphs(int n) {
    require(n >= 1 && n <= 7, "tree_graphs: n must be in 1..7");
    std::vector<PortLabeledGraph> out;
    if (n == 1) {
        PortLabeledGraph g;
        g.vertex_count = 1;
        out.push_back(g);
        return out;
    }
    if (n == 2) {
        PortLabeledGraph g;
        g.vertex_count = 2;
        g.add_edge(0, 1, 0, 0);
        out.push_back(g);
        return out;
    }
    int len = n - 2;
    std::vector<int> seq(len, 0);
    while (true) {
        std::vector<int> deg(n, 1);
        for (int s : seq)
            ++deg[s];
        std::vector<std::pair<Vertex, Vertex>> edges;
        std::vector<int> d = deg;
        std::vector<char> done(n, 0);
        for (int s : seq) {
            int leaf = -1;
            for (int v = 0; v < n; ++v)
                if (d[v] == 1 && !done[v]) {
                    leaf = v;
                    break;
                }
            edges.emplace_back(std::min(leaf, s), std::max(leaf, s));
            done[leaf] = 1;
            --d[s];
        }
        std::vector<Vertex> rest;
        for (int v = 0; v < n; ++v)
            if (!done[v])
                rest.push_back(v);
        edges.emplace_back(rest[0], rest[1]);
        std::sort(edges.begin(), edges.end());
        PortLabeledGraph g;
        g.vertex_count = n;
        std::vector<Port> next_port(n, 0);
        for (const auto& [u, v] : edges)
            g.add_edge(u, v, next_port[u]++, next_port[v]++);
        g.normalize();
        out.push_back(g);

        int i = len - 1;
        while (i >= 0 && seq[i] == n - 1)
            seq[i--] = 0;
        if (i < 0)
            break;
        ++seq[i];
    }
    return out;
}

struct NamedGraph {
    std::string name;
    PortLabeledGraph graph;
};

inline std::uint64_t graph_hash(const PortLabeledGraph& g) { return fnv1a(serialize(g)); }

struct CorpusManifest {
    struct Entry {
        std::string name;
        int vertex_count = 0;
        std::uint64_t hash = 0;
    };
    std::vector<Entry> entries;

    std::uint64_t total_hash() const {
        std::uint64_t h = 0xcbf29ce484222325ULL;
        for (const auto& e : entries) {
            h = fnv1a(e.name, h);
            h = fnv1a(&e.hash, sizeof(e.hash), h);
        }
        return h;
    }
};

inline CorpusManifest manifest_of(const std::vector<NamedGraph>& corpus) {
    CorpusManifest m;
    for (const auto& ng : corpus)
        m.entries.push_back({ng.name, ng.graph.vertex_count, graph_hash(ng.graph)});
    return m;
}

} // namespace explab
