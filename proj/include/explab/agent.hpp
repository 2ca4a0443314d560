#pragma once

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include <json.hpp>

#include "explab/graph.hpp"

namespace explab {

using StateId = int;
constexpr int kStay = -1; // move value meaning "remain at the current vertex"
constexpr int kAnyKey = -1;

using PebbleSet = std::set<int>;

inline PebbleSet set_union(const PebbleSet& a, const PebbleSet& b) {
    PebbleSet r = a;
    r.insert(b.begin(), b.end());
    return r;
}

inline PebbleSet set_minus(const PebbleSet& a, const PebbleSet& b) {
    PebbleSet r;
    for (int x : a)
        if (!b.count(x))
            r.insert(x);
    return r;
}

inline PebbleSet set_intersect(const PebbleSet& a, const PebbleSet& b) {
    PebbleSet r;
    for (int x : a)
        if (b.count(x))
            r.insert(x);
    return r;
}

// Observation available to an agent in one step.
struct AgentIn {
    StateId state = 0;
    int degree = 0;
    Port back = 0;
    PebbleSet carried; // P_A
    PebbleSet here;    // P_v, disjoint from carried
};

struct AgentOut {
    StateId state = 0;
    int move = kStay; // port or kStay
    PebbleSet carried;
    PebbleSet here;
};

// Finite-state agent with optional pebbles. The transition function may be an
// explicit row table (document-loadable, wildcard degree/back keys) or a
// rule closure; rules keep compiled agents finite even though the (degree,
// back-label) domain is unbounded.
struct AgentSpec {
    std::string name = "agent";
    int state_count = 1;
    StateId start = 0;
    std::set<StateId> halting;
    int pebble_count = 0;

    struct Row {
        StateId state = 0;
        int degree = kAnyKey; // kAnyKey matches any degree
        int back = kAnyKey;   // kAnyKey matches any back-label
        PebbleSet carried;
        PebbleSet here;
        AgentOut out;
    };
    std::vector<Row> rows;
    std::function<std::optional<AgentOut>(const AgentIn&)> rule; // consulted before rows

    std::optional<AgentOut> transition(const AgentIn& in) const {
        if (rule) {
            if (auto out = rule(in))
                return out;
        }
        // Exact keys take precedence over wildcards; degree wildcards over
        // back wildcards; first matching row in that order wins.
        const Row* best = nullptr;
        int best_rank = 5;
        for (const Row& r : rows) {
            if (r.state != in.state || r.carried != in.carried || r.here != in.here)
                continue;
            bool dm = r.degree == in.degree, bm = r.back == in.back;
            bool dw = r.degree == kAnyKey, bw = r.back == kAnyKey;
            int rank;
            if (dm && bm)
                rank = 0;
            else if (dm && bw)
                rank = 1;
            else if (dw && bm)
                rank = 2;
            else if (dw && bw)
                rank = 3;
            else
                continue;
            if (rank < best_rank) {
                best_rank = rank;
                best = &r;
            }
        }
        if (best)
            return best->out;
        return std::nullopt;
    }

    void check_transition(const AgentIn& in, const AgentOut& out) const {
        require(out.state >= 0 && out.state < state_count, name + ": transition to unknown state");
        require(out.move == kStay || (out.move >= 0 && out.move < in.degree),
                name + ": move " + std::to_string(out.move) + " out of range for degree " +
                    std::to_string(in.degree));
        require(set_intersect(out.carried, out.here).empty(), name + ": carried and placed pebbles overlap");
        require(set_union(out.carried, out.here) == set_union(in.carried, in.here),
                name + ": pebbles not conserved by transition");
    }
};

// Simple named agents used across tests and searches.

// One state, always exits by port (back + offset) mod degree.
inline AgentSpec make_offset_agent(int offset, const std::string& name = "") {
    AgentSpec a;
    a.name = name.empty() ? "offset" + std::to_string(offset) : name;
    a.state_count = 1;
    a.rule = [offset](const AgentIn& in) -> std::optional<AgentOut> {
        return AgentOut{0, (in.back + offset) % in.degree, in.carried, in.here};
    };
    return a;
}

// Always exits by a fixed absolute port (port 0 gives the oscillator).
inline AgentSpec make_port_agent(int port, const std::string& name = "") {
    AgentSpec a;
    a.name = name.empty() ? "port" + std::to_string(port) : name;
    a.state_count = 1;
    a.rule = [port](const AgentIn& in) -> std::optional<AgentOut> {
        if (port >= in.degree)
            return std::nullopt;
        return AgentOut{0, port, in.carried, in.here};
    };
    return a;
}

// Two states alternating between two offset rules.
inline AgentSpec make_two_phase_agent(int offset_a, int offset_b, const std::string& name = "") {
    AgentSpec a;
    a.name = name.empty() ? "twophase" : name;
    a.state_count = 2;
    a.rule = [offset_a, offset_b](const AgentIn& in) -> std::optional<AgentOut> {
        int off = in.state == 0 ? offset_a : offset_b;
        return AgentOut{1 - in.state, (in.back + off) % in.degree, in.carried, in.here};
    };
    return a;
}

// Same behavior as `base` but starting in `state`.
inline AgentSpec with_start_state(const AgentSpec& base, StateId state) {
    AgentSpec a = base;
    a.name = base.name + "@" + std::to_string(state);
    require(state >= 0 && state < base.state_count, "with_start_state: state out of range");
    a.start = state;
    return a;
}

// Cooperative set: per-agent transition functions observing the co-located
// agents' states. Entry j in the visible vector is the state of agent j
// (skipping the observer itself) or kNotHere when elsewhere.
constexpr StateId kNotHere = -1;

struct CoopAgentIn {
    StateId state = 0;
    std::vector<StateId> visible; // length k-1
    int degree = 0;
    Port back = 0;
};

struct CoopAgentOut {
    StateId state = 0;
    int move = kStay;
};

struct CooperativeAgentSpec {
    struct Member {
        std::string name = "agent";
        int state_count = 1;
        StateId start = 0;
        std::set<StateId> halting;
        std::function<std::optional<CoopAgentOut>(const CoopAgentIn&)> rule;
    };
    std::vector<Member> members;

    int size() const { return static_cast<int>(members.size()); }
};

// -- document I/O for explicit-table agents ---------------------------------

inline nlohmann::json agent_to_json(const AgentSpec& a) {
    require(!a.rule || !a.rows.empty(),
            "agent_to_json: rule-based agent without rows cannot be serialized");
    nlohmann::json j;
    j["name"] = a.name;
    j["state_count"] = a.state_count;
    j["start"] = a.start;
    j["halting"] = std::vector<int>(a.halting.begin(), a.halting.end());
    j["pebble_count"] = a.pebble_count;
    j["rows"] = nlohmann::json::array();
    for (const auto& r : a.rows) {
        nlohmann::json row;
        row["state"] = r.state;
        if (r.degree == kAnyKey)
            row["degree"] = "any";
        else
            row["degree"] = r.degree;
        if (r.back == kAnyKey)
            row["back"] = "any";
        else
            row["back"] = r.back;
        row["carried"] = std::vector<int>(r.carried.begin(), r.carried.end());
        row["here"] = std::vector<int>(r.here.begin(), r.here.end());
        row["next"] = r.out.state;
        if (r.out.move == kStay)
            row["move"] = "stay";
        else
            row["move"] = r.out.move;
        row["carried2"] = std::vector<int>(r.out.carried.begin(), r.out.carried.end());
        row["here2"] = std::vector<int>(r.out.here.begin(), r.out.here.end());
        j["rows"].push_back(row);
    }
    return j;
}

inline AgentSpec agent_from_json(const nlohmann::json& j) {
    AgentSpec a;
    a.name = j.value("name", "agent");
    a.state_count = j.at("state_count").get<int>();
    a.start = j.value("start", 0);
    for (int h : j.value("halting", std::vector<int>{}))
        a.halting.insert(h);
    a.pebble_count = j.value("pebble_count", 0);
    for (const auto& row : j.value("rows", nlohmann::json::array())) {
        AgentSpec::Row r;
        r.state = row.at("state").get<int>();
        r.degree = row.at("degree").is_string() ? kAnyKey : row.at("degree").get<int>();
        r.back = row.at("back").is_string() ? kAnyKey : row.at("back").get<int>();
        for (int x : row.value("carried", std::vector<int>{}))
            r.carried.insert(x);
        for (int x : row.value("here", std::vector<int>{}))
            r.here.insert(x);
        r.out.state = row.at("next").get<int>();
        r.out.move = row.at("move").is_string() ? kStay : row.at("move").get<int>();
        for (int x : row.value("carried2", std::vector<int>{}))
            r.out.carried.insert(x);
        for (int x : row.value("here2", std::vector<int>{}))
            r.out.here.insert(x);
        a.rows.push_back(std::move(r));
    }
    return a;
}

} // namespace explab
