#pragma once

#include <bit>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>
#include <unordered_set>

#include <json.hpp>

#include "explab/corpus.hpp"
#include "explab/sequence.hpp"

namespace explab {

// Certificate for a (family of) exploration sequences: following `sequence`
// from every start vertex of every graph in the described corpus visits at
// least min{coverage_target, n} distinct vertices. coverage_target of INT_MAX
// means full exploration (a universal exploration sequence for the corpus).
struct UxsCertificate {
    int n = 0;
    int d = 3;
    std::string corpus_descriptor;
    ExplorationSequence sequence;
    int coverage_target = std::numeric_limits<int>::max();
    bool verified = false;
};

struct UniversalityReport {
    bool ok = false;
    std::string first_failure; // empty when ok
    std::vector<std::pair<std::string, int>> min_distinct_per_graph;
};

// Simulates `seq` from every start vertex of every corpus graph and checks
// the per-graph coverage min{target, n}.
inline UniversalityReport verify_universal(const ExplorationSequence& seq, const std::vector<NamedGraph>& corpus,
                                           int coverage_target = std::numeric_limits<int>::max()) {
    UniversalityReport rep;
    rep.ok = true;
    for (const NamedGraph& ng : corpus) {
        Adjacency adj(ng.graph);
        int min_distinct = std::numeric_limits<int>::max();
        int need = std::min<long long>(coverage_target, ng.graph.vertex_count);
        for (Vertex s = 0; s < ng.graph.vertex_count; ++s) {
            Walk w = follow(adj, s, seq);
            min_distinct = std::min(min_distinct, w.distinct_count);
            if (w.distinct_count < need && rep.ok) {
                rep.ok = false;
                rep.first_failure = ng.name + " start " + std::to_string(s) + ": visited " +
                                    std::to_string(w.distinct_count) + " < " + std::to_string(need);
            }
        }
        rep.min_distinct_per_graph.emplace_back(ng.name, min_distinct);
    }
    return rep;
}

struct UxsSearchBudget {
    std::size_t max_depth = 64;
    std::size_t max_nodes = 4'000'000;
};

namespace detail {

// One (graph, start) obligation for the breadth-first universal-sequence
// search. Fully-covered components collapse to a sentinel so equivalent
// futures dedup.
struct SearchComponent {
    Adjacency adj;
    int need = 0;
};

} // namespace detail

// Shortest-first search for an exploration sequence over {0,1,2} exploring
// min{coverage_target, n} vertices of every corpus graph from every start.
// Breadth-first over prefix equivalence classes: two prefixes inducing the
// same (vertex, back label, visited set) on every component share their
// future and are explored once. Throws on exhausted budget, reporting the
// frontier depth.
inline UxsCertificate find_uxs_bruteforce(int n, int d, const std::string& corpus_descriptor,
                                          const std::vector<NamedGraph>& corpus,
                                          int coverage_target = std::numeric_limits<int>::max(),
                                          const UxsSearchBudget& budget = {}) {
    require(d == 3, "find_uxs_bruteforce: only degree 3 is supported");
    for (const NamedGraph& ng : corpus)
        require(ng.graph.vertex_count <= 20, "find_uxs_bruteforce: corpus graph too large (n <= 20)");

    UxsCertificate cert;
    cert.n = n;
    cert.d = d;
    cert.corpus_descriptor = corpus_descriptor;
    cert.coverage_target = coverage_target;
    cert.sequence.alphabet = Alphabet::offsets_012;

    std::vector<detail::SearchComponent> comps;
    for (const NamedGraph& ng : corpus) {
        int need = std::min<long long>(coverage_target, ng.graph.vertex_count);
        for (Vertex s = 0; s < ng.graph.vertex_count; ++s)
            comps.push_back({Adjacency(ng.graph), need});
    }
    const std::size_t k = comps.size();
    if (k == 0 || n <= 1) {
        cert.verified = true; // nothing to explore
        return cert;
    }

    // Packed per-component state: visited mask | vertex | back label, or the
    // done sentinel.
    constexpr std::uint32_t kDone = 0xffffffffu;
    auto pack = [](std::uint32_t mask, int vertex, int back) {
        return (mask << 7) | (static_cast<std::uint32_t>(vertex) << 2) | static_cast<std::uint32_t>(back);
    };

    std::vector<std::uint32_t> init(k);
    bool all_done = true;
    {
        std::size_t idx = 0;
        for (const NamedGraph& ng : corpus) {
            int need = std::min<long long>(coverage_target, ng.graph.vertex_count);
            for (Vertex s = 0; s < ng.graph.vertex_count; ++s) {
                if (need <= 1)
                    init[idx] = kDone;
                else {
                    init[idx] = pack(1u << s, s, 0);
                    all_done = false;
                }
                ++idx;
            }
        }
    }
    if (all_done) {
        cert.verified = true;
        return cert;
    }

    struct VecHash {
        std::size_t operator()(const std::vector<std::uint32_t>& v) const {
            return static_cast<std::size_t>(fnv1a(v.data(), v.size() * sizeof(std::uint32_t)));
        }
    };
    std::unordered_set<std::vector<std::uint32_t>, VecHash> seen;
    struct Node {
        std::int64_t parent;
        int offset;
    };
    std::vector<Node> nodes;
    std::vector<std::pair<std::vector<std::uint32_t>, std::int64_t>> frontier;
    frontier.emplace_back(init, -1);
    seen.insert(init);

    std::vector<int> popcount_cache; // distinct count per mask is popcount

    for (std::size_t depth = 0; depth < budget.max_depth; ++depth) {
        std::vector<std::pair<std::vector<std::uint32_t>, std::int64_t>> next;
        for (const auto& [state, parent_node] : frontier) {
            for (int e = 0; e < 3; ++e) {
                std::vector<std::uint32_t> succ(k);
                bool done = true;
                std::size_t idx = 0;
                bool valid = true;
                for (std::size_t c = 0; c < k && valid; ++c) {
                    std::uint32_t s = state[c];
                    if (s == kDone) {
                        succ[c] = kDone;
                        continue;
                    }
                    std::uint32_t mask = s >> 7;
                    int vertex = static_cast<int>((s >> 2) & 0x1f);
                    int back = static_cast<int>(s & 0x3);
                    const Adjacency& adj = comps[c].adj;
                    Port out = detail::mod(back + e, adj.degree(vertex));
                    const Adjacency::Arc& arc = adj.at(vertex, out);
                    std::uint32_t mask2 = mask | (1u << arc.to);
                    int distinct = std::popcount(mask2);
                    if (distinct >= comps[c].need)
                        succ[c] = kDone;
                    else {
                        succ[c] = pack(mask2, arc.to, arc.back);
                        done = false;
                    }
                    ++idx;
                }
                (void)idx;
                if (!valid)
                    continue;
                std::int64_t node_id = static_cast<std::int64_t>(nodes.size());
                if (done) {
                    // Reconstruct the sequence: parent chain plus this offset.
                    std::vector<int> rev{e};
                    for (std::int64_t p = parent_node; p >= 0; p = nodes[p].parent)
                        rev.push_back(nodes[p].offset);
                    cert.sequence.offsets.assign(rev.rbegin(), rev.rend());
                    cert.verified = true;
                    return cert;
                }
                if (seen.insert(succ).second) {
                    nodes.push_back({parent_node, e});
                    next.emplace_back(std::move(succ), node_id);
                    if (nodes.size() > budget.max_nodes)
                        fail("find_uxs_bruteforce: node budget exhausted at frontier depth " +
                             std::to_string(depth + 1));
                }
            }
        }
        if (next.empty())
            fail("find_uxs_bruteforce: frontier died out at depth " + std::to_string(depth));
        frontier = std::move(next);
    }
    fail("find_uxs_bruteforce: depth budget exhausted at frontier depth " + std::to_string(budget.max_depth));
}

// Deterministic coverage-certified sequence: seeded random offsets extended
// until every (graph, start) obligation reaches min{target, n} distinct
// vertices, then trimmed to the shortest sufficient prefix. Not universal in
// the paper's sense; the certificate names the corpus it was checked on.
inline UxsCertificate build_certified_sequence(const std::vector<NamedGraph>& corpus, int coverage_target,
                                               const std::string& corpus_descriptor, std::uint64_t seed,
                                               std::size_t max_len = 2'000'000) {
    UxsCertificate cert;
    cert.n = 0;
    for (const NamedGraph& ng : corpus)
        cert.n = std::max(cert.n, ng.graph.vertex_count);
    cert.d = 3;
    cert.corpus_descriptor = corpus_descriptor;
    cert.coverage_target = coverage_target;
    cert.sequence.alphabet = Alphabet::offsets_012;

    struct Pending {
        Adjacency adj;
        Vertex at;
        Port back;
        std::vector<char> seen;
        int distinct;
        int need;
    };
    std::vector<Pending> pend;
    for (const NamedGraph& ng : corpus) {
        Adjacency adj(ng.graph);
        int need = std::min<long long>(coverage_target, ng.graph.vertex_count);
        if (need <= 1)
            continue;
        for (Vertex s = 0; s < ng.graph.vertex_count; ++s) {
            Pending p{adj, s, 0, std::vector<char>(ng.graph.vertex_count, 0), 1, need};
            p.seen[s] = 1;
            pend.push_back(std::move(p));
        }
    }

    Rng rng(seed);
    std::size_t satisfied_at = 0;
    std::size_t remaining = pend.size();
    while (remaining > 0) {
        require(cert.sequence.offsets.size() < max_len, "build_certified_sequence: length budget exhausted");
        int e = rng.below_int(3);
        cert.sequence.offsets.push_back(e);
        for (Pending& p : pend) {
            if (p.distinct >= p.need)
                continue;
            Port out = detail::mod(p.back + e, p.adj.degree(p.at));
            const Adjacency::Arc& arc = p.adj.at(p.at, out);
            p.at = arc.to;
            p.back = arc.back;
            if (!p.seen[p.at]) {
                p.seen[p.at] = 1;
                ++p.distinct;
            }
            if (p.distinct >= p.need) {
                --remaining;
                if (remaining == 0)
                    satisfied_at = cert.sequence.offsets.size();
            }
        }
    }
    cert.sequence.offsets.resize(satisfied_at);
    cert.verified = verify_universal(cert.sequence, corpus, coverage_target).ok;
    require(cert.verified, "build_certified_sequence: self-check failed");
    return cert;
}

inline nlohmann::json certificate_to_json(const UxsCertificate& c) {
    nlohmann::json j;
    j["n"] = c.n;
    j["d"] = c.d;
    j["corpus_descriptor"] = c.corpus_descriptor;
    j["offsets"] = c.sequence.offsets;
    j["alphabet"] = c.sequence.alphabet == Alphabet::offsets_012 ? "012" : "pm1";
    j["coverage_target"] = c.coverage_target;
    j["verified"] = c.verified;
    return j;
}

inline UxsCertificate certificate_from_json(const nlohmann::json& j) {
    UxsCertificate c;
    c.n = j.at("n").get<int>();
    c.d = j.at("d").get<int>();
    c.corpus_descriptor = j.at("corpus_descriptor").get<std::string>();
    c.sequence.offsets = j.at("offsets").get<std::vector<int>>();
    c.sequence.alphabet = j.at("alphabet").get<std::string>() == "012" ? Alphabet::offsets_012 : Alphabet::offsets_pm1;
    c.coverage_target = j.at("coverage_target").get<int>();
    c.verified = j.at("verified").get<bool>();
    c.sequence.check();
    return c;
}

// Process-wide certificate cache keyed by (n, d, corpus descriptor), with an
// optional on-disk layer under EXPLAB_CACHE_DIR. Values are deterministic,
// so last-writer-wins on identical keys is fine.
class CertificateCache {
  public:
    static CertificateCache& instance() {
        static CertificateCache cache;
        return cache;
    }

    std::optional<UxsCertificate> lookup(int n, int d, const std::string& descriptor) {
        std::scoped_lock lock(mu_);
        auto it = mem_.find(key(n, d, descriptor));
        if (it != mem_.end())
            return it->second;
        auto path = disk_path(n, d, descriptor);
        if (!path.empty() && std::filesystem::exists(path)) {
            std::ifstream in(path);
            std::stringstream ss;
            ss << in.rdbuf();
            try {
                UxsCertificate c = certificate_from_json(nlohmann::json::parse(ss.str()));
                mem_[key(n, d, descriptor)] = c;
                return c;
            } catch (...) {
                return std::nullopt;
            }
        }
        return std::nullopt;
    }

    void store(const UxsCertificate& c) {
        std::scoped_lock lock(mu_);
        mem_[key(c.n, c.d, c.corpus_descriptor)] = c;
        auto path = disk_path(c.n, c.d, c.corpus_descriptor);
        if (!path.empty()) {
            std::error_code ec;
            std::filesystem::create_directories(path.parent_path(), ec);
            if (!ec) {
                std::ofstream out(path);
                out << certificate_to_json(c).dump(2) << "\n";
            }
        }
    }

    void clear_memory() {
        std::scoped_lock lock(mu_);
        mem_.clear();
    }

  private:
    static std::string key(int n, int d, const std::string& descriptor) {
        return std::to_string(n) + "|" + std::to_string(d) + "|" + descriptor;
    }

    static std::filesystem::path disk_path(int n, int d, const std::string& descriptor) {
        const char* dir = std::getenv("EXPLAB_CACHE_DIR");
        if (!dir || !*dir)
            return {};
        std::uint64_t h = fnv1a(key(n, d, descriptor));
        char name[32];
        std::snprintf(name, sizeof(name), "%016llx.json", static_cast<unsigned long long>(h));
        return std::filesystem::path(dir) / name;
    }

    std::mutex mu_;
    std::map<std::string, UxsCertificate> mem_;
};

// Pluggable source of 3-regular exploration-sequence prefixes. Stands in for
// the log-space generator: prefix(a) yields the first a offsets and
// configuration_count() reports the backend's internal state count (the
// sequence length for certificate-backed providers).
class UxsProvider {
  public:
    virtual ~UxsProvider() = default;
    virtual std::vector<int> prefix(std::size_t length) const = 0;
    virtual std::size_t configuration_count() const = 0;
    virtual std::size_t max_length() const = 0;
    virtual std::string descriptor() const = 0;
};

class CertificateProvider : public UxsProvider {
  public:
    explicit CertificateProvider(UxsCertificate cert) : cert_(std::move(cert)) {
        require(cert_.verified, "CertificateProvider: certificate is not verified");
        require(cert_.sequence.alphabet == Alphabet::offsets_012,
                "CertificateProvider: provider sequences use the {0,1,2} alphabet");
    }

    std::vector<int> prefix(std::size_t length) const override {
        require(length <= cert_.sequence.offsets.size(),
                "CertificateProvider: prefix longer than the certified sequence");
        return {cert_.sequence.offsets.begin(), cert_.sequence.offsets.begin() + static_cast<long>(length)};
    }

    std::size_t configuration_count() const override { return cert_.sequence.offsets.size(); }
    std::size_t max_length() const override { return cert_.sequence.offsets.size(); }
    std::string descriptor() const override { return cert_.corpus_descriptor; }

    const UxsCertificate& certificate() const { return cert_; }

  private:
    UxsCertificate cert_;
};

} // namespace explab
