#pragma once

#include <string>

#include "explab/regularize.hpp"
#include "explab/sequence.hpp"
#include "explab/uxs.hpp"

namespace explab {

// Budget for the sequence generators. In paper mode the doubled half-length
// is a = 12*z*c_gen + 1; in desk mode a is the full certified prefix length
// of the provider backend.
struct GeneratorBudget {
    long long z = 0;     // target distinct-vertex count
    long long a = 1;     // half-length of the doubled sequence
    long long c_gen = 0; // configuration count of the generator backend

    static GeneratorBudget paper(long long z, const UxsProvider& provider) {
        GeneratorBudget b;
        b.z = z;
        b.c_gen = static_cast<long long>(provider.configuration_count());
        b.a = 12 * z * b.c_gen + 1;
        return b;
    }

    static GeneratorBudget desk(long long z, const UxsProvider& provider) {
        GeneratorBudget b;
        b.z = z;
        b.c_gen = static_cast<long long>(provider.configuration_count());
        b.a = static_cast<long long>(provider.max_length());
        return b;
    }
};

// Doubled sequence e_1..e_a, 0, (-e_a mod 3), ..., (-e_2 mod 3). Following it
// in any 3-regular graph is a closed walk: the 0 retraces the last edge and
// each -e_i undoes the corresponding forward step.
inline ExplorationSequence closed_walk_sequence_3regular(const GeneratorBudget& budget,
                                                         const UxsProvider& provider) {
    require(budget.a >= 1, "closed_walk_sequence_3regular: budget.a must be >= 1");
    std::vector<int> e = provider.prefix(static_cast<std::size_t>(budget.a));
    ExplorationSequence out;
    out.alphabet = Alphabet::offsets_012;
    out.offsets.reserve(2 * e.size());
    for (int x : e)
        out.offsets.push_back(x);
    out.offsets.push_back(0);
    for (std::size_t i = e.size(); i >= 2; --i)
        out.offsets.push_back(detail::mod(-e[i - 1], 3));
    out.check();
    return out;
}

// Constant-space label transducer for the regularized graph: edges are either
// cycle edges (ports 0/1) or cross edges (port 2), so the absolute label of
// the next edge follows from the previous label and the offset alone.
// Feeding it the offsets of a walk that starts with back-label 0 yields the
// walk's absolute labels.
class RegularizedLabelTransducer {
  public:
    int step(int offset) {
        int label = detail::mod(back_ + offset, 3);
        back_ = label == 0 ? 1 : label == 1 ? 0 : 2;
        return label;
    }

    int back_label() const { return back_; }

  private:
    int back_ = 0;
};

// Maps a stream of absolute regularized labels to the general-graph
// exploration sequence: 0 -> (1,0), 1 -> (-1,0), 2 -> (0), after the initial
// prefix (0,0).
inline ExplorationSequence lift_label_stream(const std::vector<int>& labels) {
    ExplorationSequence out;
    out.alphabet = Alphabet::offsets_pm1;
    out.offsets = {0, 0};
    for (int l : labels) {
        switch (l) {
        case 0:
            out.offsets.push_back(1);
            out.offsets.push_back(0);
            break;
        case 1:
            out.offsets.push_back(-1);
            out.offsets.push_back(0);
            break;
        case 2:
            out.offsets.push_back(0);
            break;
        default:
            fail("lift_label_stream: label outside {0,1,2}");
        }
    }
    return out;
}

// The general-graph sequence: doubled 3-regular sequence, transduced to
// absolute labels, lifted to {-1,0,1} offsets. Closed walk in any graph.
inline ExplorationSequence general_graph_sequence(const GeneratorBudget& budget, const UxsProvider& provider) {
    ExplorationSequence reg = closed_walk_sequence_3regular(budget, provider);
    RegularizedLabelTransducer t;
    std::vector<int> labels;
    labels.reserve(reg.offsets.size());
    for (int e : reg.offsets)
        labels.push_back(t.step(e));
    return lift_label_stream(labels);
}

// Stepwise co-simulation of a 3-regular walk on the regularized graph and
// the lifted walk on the base graph. After every regularized step the lifted
// agent must sit on the first coordinate of the regularized agent's
// subvertex, with back-label congruent to the subvertex index mod degree.
struct LiftCosimReport {
    bool ok = true;
    std::string failure;
    int checked_steps = 0;
};

inline LiftCosimReport lift_cosimulate(const PortLabeledGraph& g, Vertex start, const std::vector<int>& reg_offsets) {
    auto [greg, map] = koucky_regularize(g);
    std::vector<Vertex> owner(greg.vertex_count);
    std::vector<int> index_in_owner(greg.vertex_count);
    for (Vertex v = 0; v < g.vertex_count; ++v)
        for (std::size_t a = 0; a < map.forward[v].size(); ++a) {
            owner[map.forward[v][a]] = v;
            index_in_owner[map.forward[v][a]] = static_cast<int>(a);
        }

    ExplorationSequence reg_seq{Alphabet::offsets_012, reg_offsets};
    Adjacency reg_adj(greg);
    Walk reg_walk = follow(reg_adj, map.forward[start][0], reg_seq);

    RegularizedLabelTransducer t;
    std::vector<int> labels;
    for (int e : reg_offsets)
        labels.push_back(t.step(e));
    ExplorationSequence lifted = lift_label_stream(labels);
    Adjacency base_adj(g);
    Walk base_walk = follow(base_adj, start, lifted);

    auto deg = g.degrees();
    LiftCosimReport rep;
    // Lifted step index corresponding to the end of regularized iteration i:
    // 2 for the prefix, then +2 for labels 0/1 and +1 for label 2.
    std::size_t lifted_pos = 2;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        lifted_pos += labels[i] == 2 ? 1 : 2;
        Vertex sub = reg_walk.vertices[i + 1];
        Vertex expect_v = owner[sub];
        int expect_back = index_in_owner[sub] % deg[expect_v];
        Vertex got_v = base_walk.vertices[lifted_pos];
        int got_back = base_walk.back_labels[lifted_pos];
        if (got_v != expect_v || got_back != expect_back) {
            rep.ok = false;
            rep.failure = "iteration " + std::to_string(i) + ": lifted agent at vertex " + std::to_string(got_v) +
                          " back " + std::to_string(got_back) + ", expected vertex " + std::to_string(expect_v) +
                          " back " + std::to_string(expect_back);
            return rep;
        }
        ++rep.checked_steps;
    }
    return rep;
}

} // namespace explab
