#pragma once

#include <span>
#include <vector>

#include "explab/graph.hpp"

namespace explab {

enum class Alphabet {
    offsets_012, // 3-regular exploration offsets {0,1,2}
    offsets_pm1, // general-graph exploration offsets {-1,0,1}
};

// Exploration sequence: integer offsets applied to the back-label mod degree.
struct ExplorationSequence {
    Alphabet alphabet = Alphabet::offsets_012;
    std::vector<int> offsets;

    void check() const {
        for (int e : offsets) {
            if (alphabet == Alphabet::offsets_012)
                require(e >= 0 && e <= 2, "exploration sequence: offset outside {0,1,2}");
            else
                require(e >= -1 && e <= 1, "exploration sequence: offset outside {-1,0,1}");
        }
    }
};

// Traversal sequence: absolute edge labels in {0,1,2} for edge-symmetric
// 3-regular graphs.
struct TraversalSequence {
    std::vector<int> labels;

    void check() const {
        for (int l : labels)
            require(l >= 0 && l <= 2, "traversal sequence: label outside {0,1,2}");
    }
};

struct Walk {
    std::vector<Vertex> vertices;    // v_0 .. v_T
    std::vector<Port> back_labels;   // back_labels[i] = port at v_i toward v_{i-1}; back_labels[0] = 0
    int distinct_count = 0;
    bool completed = false; // sequence fully consumed (not cut off by the step limit)

    Vertex start() const { return vertices.front(); }
    Vertex end() const { return vertices.back(); }
    bool closed() const { return start() == end(); }
    std::size_t steps() const { return vertices.size() - 1; }
};

namespace detail {

inline int mod(int a, int m) {
    int r = a % m;
    return r < 0 ? r + m : r;
}

} // namespace detail

// Follows an exploration sequence from `start`. The back-label of step 0 is
// 0 by convention; at each step the agent leaves by port
// (back_label + offset) mod degree.
inline Walk follow(const Adjacency& adj, Vertex start, const ExplorationSequence& seq,
                   std::size_t limit = static_cast<std::size_t>(-1)) {
    seq.check();
    require(start >= 0 && start < adj.vertex_count(), "follow: start vertex out of range");
    Walk w;
    w.vertices.push_back(start);
    w.back_labels.push_back(0);
    std::vector<char> seen(adj.vertex_count(), 0);
    seen[start] = 1;
    w.distinct_count = 1;
    Vertex at = start;
    Port back = 0;
    std::size_t taken = 0;
    for (int e : seq.offsets) {
        if (taken >= limit)
            return w;
        int d = adj.degree(at);
        require(d > 0, "follow: stuck at isolated vertex " + std::to_string(at));
        Port out = detail::mod(back + e, d);
        const Adjacency::Arc& arc = adj.at(at, out);
        at = arc.to;
        back = arc.back;
        w.vertices.push_back(at);
        w.back_labels.push_back(back);
        if (!seen[at]) {
            seen[at] = 1;
            ++w.distinct_count;
        }
        ++taken;
    }
    w.completed = true;
    return w;
}

// Follows a traversal sequence: each listed label is the absolute port taken
// at the current vertex. Errors if a label exceeds the current degree.
inline Walk follow(const Adjacency& adj, Vertex start, const TraversalSequence& seq,
                   std::size_t limit = static_cast<std::size_t>(-1)) {
    seq.check();
    require(start >= 0 && start < adj.vertex_count(), "follow: start vertex out of range");
    Walk w;
    w.vertices.push_back(start);
    w.back_labels.push_back(0);
    std::vector<char> seen(adj.vertex_count(), 0);
    seen[start] = 1;
    w.distinct_count = 1;
    Vertex at = start;
    std::size_t taken = 0;
    for (int l : seq.labels) {
        if (taken >= limit)
            return w;
        require(l < adj.degree(at), "follow: traversal label " + std::to_string(l) +
                                        " >= degree of vertex " + std::to_string(at));
        const Adjacency::Arc& arc = adj.at(at, l);
        at = arc.to;
        w.vertices.push_back(at);
        w.back_labels.push_back(arc.back);
        if (!seen[at]) {
            seen[at] = 1;
            ++w.distinct_count;
        }
        ++taken;
    }
    w.completed = true;
    return w;
}

} // namespace explab
