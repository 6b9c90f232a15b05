#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <exception>
#include <mutex>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "heavypath/families.hpp"
#include "heavypath/graph.hpp"
#include "heavypath/graph6.hpp"
#include "heavypath/invariants.hpp"
#include "heavypath/orepath.hpp"
#include "heavypath/search.hpp"

namespace heavypath {

enum class Theorem {
    Cycle,         // cycle through degree >= n-omega in 2-connected graphs
    Path,          // (u,v)-path through degree >= n-omega+1, all qualifying pairs
    OrePathThm,    // constructive (u,v)-path through degree >= (n+1)/2
    Pancyclic,     // delta+omega >= n, 2-connected => pancyclic
    Hamiltonian,   // delta+omega >= n, 2-connected => hamiltonian
    HamConnected,  // delta+omega >= n+1 => hamiltonian-connected
    OreHC,         // ore degree condition => hamiltonian-connected
    BBCycle,       // cycle through degree >= n/2 in 2-connected graphs
    BondyLemma,    // heavy Hamilton-cycle edge => pancyclic
    FaudreeLemma,  // hamiltonian, m > ((n-1)/2)^2 - 1 => pancyclic or bipartite
    BondyTheorem,  // hamiltonian, m >= n^2/4 => pancyclic or K_{n/2,n/2}
};

inline const char* theorem_tag(Theorem t) {
    switch (t) {
        case Theorem::Cycle: return "cycle";
        case Theorem::Path: return "path";
        case Theorem::OrePathThm: return "orepath";
        case Theorem::Pancyclic: return "pancyclic";
        case Theorem::Hamiltonian: return "hamiltonian";
        case Theorem::HamConnected: return "ham-connected";
        case Theorem::OreHC: return "ore-hc";
        case Theorem::BBCycle: return "bb-cycle";
        case Theorem::BondyLemma: return "bondy-lemma";
        case Theorem::FaudreeLemma: return "faudree-lemma";
        case Theorem::BondyTheorem: return "bondy-theorem";
    }
    return "?";
}

inline std::optional<Theorem> parse_theorem_tag(const std::string& s) {
    for (Theorem t :
         {Theorem::Cycle, Theorem::Path, Theorem::OrePathThm, Theorem::Pancyclic,
          Theorem::Hamiltonian, Theorem::HamConnected, Theorem::OreHC, Theorem::BBCycle,
          Theorem::BondyLemma, Theorem::FaudreeLemma, Theorem::BondyTheorem})
        if (s == theorem_tag(t)) return t;
    return std::nullopt;
}

inline std::vector<Theorem> all_theorems() {
    return {Theorem::Cycle,        Theorem::Path,       Theorem::OrePathThm,
            Theorem::Pancyclic,    Theorem::Hamiltonian, Theorem::HamConnected,
            Theorem::OreHC,        Theorem::BBCycle,     Theorem::BondyLemma,
            Theorem::FaudreeLemma, Theorem::BondyTheorem};
}

// ---------- corpus ----------

inline constexpr int kExhaustiveDefaultCap = 7;
inline constexpr int kExhaustiveHardCap = 8;

// labeled graph on n vertices from an upper-triangle edge mask, graph6 bit order
inline Graph graph_from_mask(int n, uint64_t mask) {
    GraphBuilder gb(n);
    int e = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u, ++e)
            if ((mask >> e) & 1ULL) gb.add_edge(u, v);
    return gb.build();
}

inline uint64_t labeled_graph_count(int n) { return 1ULL << (n * (n - 1) / 2); }

template <class F>
void enumerate_labeled(int n, F f, bool allow_large = false) {
    if (n < 1 || n > kExhaustiveHardCap || (!allow_large && n > kExhaustiveDefaultCap))
        throw std::invalid_argument("enumerate_labeled: order outside the supported cap");
    uint64_t total = labeled_graph_count(n);
    for (uint64_t m = 0; m < total; ++m) f(graph_from_mask(n, m));
}

inline Graph random_graph(int n, double p, uint64_t seed) {
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("random_graph: p outside [0,1]");
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(p);
    GraphBuilder gb(n);
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u)
            if (coin(rng)) gb.add_edge(u, v);
    return gb.build();
}

namespace detail {
inline uint64_t mix_seed(uint64_t seed, uint64_t i) {
    uint64_t z = seed + (i + 1) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}
}  // namespace detail

struct CorpusSpec {
    enum class Source { Exhaustive, Graph6, Random };
    Source source = Source::Exhaustive;
    int n = 0;
    bool allow_large = false;
    std::vector<std::string> graph6_lines;
    double p = 0.5;
    uint64_t count = 0;
    uint64_t seed = 0;
    bool filter_two_connected = false;
    bool filter_delta_omega = false;  // keep graphs with delta + omega >= n

    uint64_t size() const {
        switch (source) {
            case Source::Exhaustive:
                if (n < 1 || n > kExhaustiveHardCap || (!allow_large && n > kExhaustiveDefaultCap))
                    throw std::invalid_argument("corpus: exhaustive order outside the supported cap");
                return labeled_graph_count(n);
            case Source::Graph6: return graph6_lines.size();
            case Source::Random: return count;
        }
        return 0;
    }

    Graph item(uint64_t i) const {
        switch (source) {
            case Source::Exhaustive: return graph_from_mask(n, i);
            case Source::Graph6: return parse_graph6(graph6_lines[i]);
            case Source::Random: return random_graph(n, p, detail::mix_seed(seed, i));
        }
        throw std::logic_error("corpus: bad source");
    }

    bool passes_filters(const Graph& g) const {
        if (filter_two_connected && !is_two_connected(g)) return false;
        if (filter_delta_omega && min_degree(g) + max_clique_size(g) < g.order()) return false;
        return true;
    }
};

// ---------- per-graph theorem checks ----------

struct CheckOutcome {
    VerdictKind kind;
    std::string reason;
};

namespace detail {

inline std::vector<std::pair<int, int>> qualifying_pairs(const Graph& g, int threshold) {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < g.order(); ++u) {
        if (g.degree(u) < threshold) continue;
        for (int v = u + 1; v < g.order(); ++v)
            if (g.degree(v) >= threshold) out.emplace_back(u, v);
    }
    return out;
}

inline CheckOutcome check_cycle_theorem(const Graph& g) {
    if (!is_two_connected(g)) return {VerdictKind::NotApplicable, "not 2-connected"};
    int n = g.order();
    int omega = max_clique_size(g);
    VertexSet required = degree_at_least(g, n - omega);
    if (is_cycle_exception(g)) {
        // tightness: the exception graph must genuinely lack the cycle
        if (find_cycle_through(g, required))
            return {VerdictKind::Counterexample, "exception clause not tight: cycle exists"};
        return {VerdictKind::Exceptional, ""};
    }
    if (find_cycle_through(g, required)) return {VerdictKind::Witness, ""};
    return {VerdictKind::Counterexample, "no cycle through degree >= n-omega"};
}

inline CheckOutcome check_bb_cycle(const Graph& g) {
    if (!is_two_connected(g)) return {VerdictKind::NotApplicable, "not 2-connected"};
    int n = g.order();
    VertexSet required(n);
    for (int v = 0; v < n; ++v)
        if (2 * g.degree(v) >= n) required.set(v);
    if (find_cycle_through(g, required)) return {VerdictKind::Witness, ""};
    return {VerdictKind::Counterexample, "no cycle through degree >= n/2"};
}

inline CheckOutcome check_path_theorem(const Graph& g) {
    int n = g.order();
    int omega = max_clique_size(g);
    int threshold = n - omega + 1;
    auto pairs = qualifying_pairs(g, threshold);
    if (pairs.empty()) return {VerdictKind::NotApplicable, "no qualifying (u,v) pair"};
    VertexSet required = degree_at_least(g, threshold);
    bool exceptional =
        path_family_range(n, omega) && (is_path_exception(g) || is_in_h_class(g));
    if (exceptional) {
        for (auto [u, v] : pairs)
            if (!find_path_through(g, u, v, required)) return {VerdictKind::Exceptional, ""};
        return {VerdictKind::Counterexample, "exception clause not tight: every pair has a path"};
    }
    bool constructive = 2 * threshold >= n + 1;
    for (auto [u, v] : pairs) {
        if (constructive) {
            try {
                RepairResult r = heavy_path(g, u, v);
                if (!r.path.vertex_set().contains_all(required))
                    return {VerdictKind::Counterexample, "constructed path missed a heavy vertex"};
            } catch (const RepairStuckError&) {
                return {VerdictKind::Counterexample, "repair aborted with no available move"};
            }
        } else if (!find_path_through(g, u, v, required)) {
            return {VerdictKind::Counterexample,
                    "pair (" + std::to_string(u) + "," + std::to_string(v) + ") has no heavy path"};
        }
    }
    return {VerdictKind::Witness, ""};
}

inline CheckOutcome check_orepath_theorem(const Graph& g) {
    int n = g.order();
    VertexSet heavy(n);
    for (int v = 0; v < n; ++v)
        if (2 * g.degree(v) >= n + 1) heavy.set(v);
    auto pairs = qualifying_pairs(g, (n + 2) / 2);  // d >= (n+1)/2 as 2d >= n+1
    // no connectivity hypothesis: graphs without qualifying pairs hold vacuously
    for (auto [u, v] : pairs) {
        try {
            RepairResult r = heavy_path(g, u, v);
            const Path& p = r.path;
            if (p.first() != u || p.last() != v || !p.vertex_set().contains_all(heavy))
                return {VerdictKind::Counterexample, "heavy_path output failed re-validation"};
        } catch (const RepairStuckError&) {
            return {VerdictKind::Counterexample, "repair aborted with no available move"};
        }
    }
    return {VerdictKind::Witness, ""};
}

inline CheckOutcome check_pancyclic_theorem(const Graph& g) {
    auto v = pancyclic_verdict(g);
    if (v.kind == VerdictKind::Exceptional && is_pancyclic(g).pancyclic)
        return {VerdictKind::Counterexample, "exception clause not tight: graph is pancyclic"};
    return {v.kind, v.reason};
}

inline CheckOutcome check_hamiltonian_theorem(const Graph& g) {
    if (!is_two_connected(g)) return {VerdictKind::NotApplicable, "not 2-connected"};
    int n = g.order();
    int omega = max_clique_size(g);
    if (min_degree(g) + omega < n) return {VerdictKind::NotApplicable, "delta + omega < n"};
    if (is_cycle_exception(g)) {
        if (is_hamiltonian(g))
            return {VerdictKind::Counterexample, "exception clause not tight: graph is hamiltonian"};
        return {VerdictKind::Exceptional, ""};
    }
    if (is_hamiltonian(g)) return {VerdictKind::Witness, ""};
    return {VerdictKind::Counterexample, "not hamiltonian"};
}

inline CheckOutcome check_ham_connected_theorem(const Graph& g) {
    int n = g.order();
    int omega = max_clique_size(g);
    if (min_degree(g) + omega < n + 1) return {VerdictKind::NotApplicable, "delta + omega < n+1"};
    bool exceptional =
        path_family_range(n, omega) && (is_path_exception(g) || is_in_h_class(g));
    if (exceptional) {
        if (is_hamiltonian_connected(g).value)
            return {VerdictKind::Counterexample,
                    "exception clause not tight: graph is hamiltonian-connected"};
        return {VerdictKind::Exceptional, ""};
    }
    if (is_hamiltonian_connected(g).value) return {VerdictKind::Witness, ""};
    return {VerdictKind::Counterexample, "not hamiltonian-connected"};
}

inline CheckOutcome check_ore_hc(const Graph& g) {
    int n = g.order();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v) && g.degree(u) + g.degree(v) < n + 1)
                return {VerdictKind::NotApplicable, "ore condition fails"};
    if (is_hamiltonian_connected(g).value) return {VerdictKind::Witness, ""};
    return {VerdictKind::Counterexample, "ore condition holds but not hamiltonian-connected"};
}

inline CheckOutcome check_bondy_lemma(const Graph& g) {
    int n = g.order();
    if (n < 3) return {VerdictKind::NotApplicable, "order below 3"};
    // hypothesis: some Hamilton cycle has an edge with degree sum > n
    bool applies = false;
    VertexSet all = VertexSet::full(n);
    for (int u = 0; u < n && !applies; ++u)
        for (int v = u + 1; v < n && !applies; ++v)
            if (g.has_edge(u, v) && g.degree(u) + g.degree(v) > n &&
                find_path_through(g, u, v, all))
                applies = true;
    if (!applies) return {VerdictKind::NotApplicable, "no heavy Hamilton-cycle edge"};
    if (is_pancyclic(g).pancyclic) return {VerdictKind::Witness, ""};
    return {VerdictKind::Counterexample, "heavy Hamilton-cycle edge but not pancyclic"};
}

inline CheckOutcome check_faudree_lemma(const Graph& g) {
    int n = g.order();
    long m = g.edge_count();
    // exact form of m > ((n-1)/2)^2 + 1; hamiltonian graphs achieve equality
    // while being neither pancyclic nor bipartite (e.g. C_5), so the bound is strict
    if (4 * m <= (long(n) - 1) * (n - 1) + 4 || !is_hamiltonian(g))
        return {VerdictKind::NotApplicable, "hypothesis fails"};
    if (is_pancyclic(g).pancyclic || is_bipartite(g).bipartite) return {VerdictKind::Witness, ""};
    return {VerdictKind::Counterexample, "neither pancyclic nor bipartite"};
}

inline CheckOutcome check_bondy_theorem(const Graph& g) {
    int n = g.order();
    long m = g.edge_count();
    if (4 * m < long(n) * n || !is_hamiltonian(g))
        return {VerdictKind::NotApplicable, "hypothesis fails"};
    if (is_balanced_complete_bipartite(g)) return {VerdictKind::Exceptional, ""};
    if (is_pancyclic(g).pancyclic) return {VerdictKind::Witness, ""};
    return {VerdictKind::Counterexample, "not pancyclic and not K_{n/2,n/2}"};
}

}  // namespace detail

inline CheckOutcome check_graph(const Graph& g, Theorem t) {
    switch (t) {
        case Theorem::Cycle: return detail::check_cycle_theorem(g);
        case Theorem::Path: return detail::check_path_theorem(g);
        case Theorem::OrePathThm: return detail::check_orepath_theorem(g);
        case Theorem::Pancyclic: return detail::check_pancyclic_theorem(g);
        case Theorem::Hamiltonian: return detail::check_hamiltonian_theorem(g);
        case Theorem::HamConnected: return detail::check_ham_connected_theorem(g);
        case Theorem::OreHC: return detail::check_ore_hc(g);
        case Theorem::BBCycle: return detail::check_bb_cycle(g);
        case Theorem::BondyLemma: return detail::check_bondy_lemma(g);
        case Theorem::FaudreeLemma: return detail::check_faudree_lemma(g);
        case Theorem::BondyTheorem: return detail::check_bondy_theorem(g);
    }
    throw std::logic_error("check_graph: bad theorem tag");
}

// ---------- verification report + worker pool ----------

struct CounterexampleRecord {
    std::string graph6;
    std::string reason;
};

struct VerificationReport {
    std::string theorem;
    uint64_t graphs_checked = 0;
    uint64_t witnesses = 0;
    uint64_t exceptional_matches = 0;
    uint64_t not_applicable = 0;
    uint64_t counterexamples = 0;
    std::vector<CounterexampleRecord> counterexample_list;
    double wall_time_ms = 0.0;
};

inline VerificationReport verify_theorem(const CorpusSpec& corpus, Theorem theorem,
                                         int jobs = 1) {
    if (jobs < 1) jobs = 1;
    auto t0 = std::chrono::steady_clock::now();
    uint64_t total = corpus.size();

    struct Partial {
        uint64_t checked = 0, wit = 0, exc = 0, na = 0, cex = 0;
        std::vector<CounterexampleRecord> records;
    };

    uint64_t chunk = std::max<uint64_t>(1, std::min<uint64_t>(16384, total / (uint64_t(jobs) * 8) + 1));
    uint64_t nchunks = total == 0 ? 0 : (total + chunk - 1) / chunk;
    std::vector<Partial> partials(nchunks);
    std::atomic<uint64_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mu;

    auto work = [&]() {
        try {
            for (;;) {
                uint64_t c = next.fetch_add(1);
                if (c >= nchunks) return;
                Partial& part = partials[c];
                uint64_t lo = c * chunk, hi = std::min(total, lo + chunk);
                for (uint64_t i = lo; i < hi; ++i) {
                    Graph g = corpus.item(i);
                    if (!corpus.passes_filters(g)) continue;
                    CheckOutcome out = check_graph(g, theorem);
                    ++part.checked;
                    switch (out.kind) {
                        case VerdictKind::Witness: ++part.wit; break;
                        case VerdictKind::Exceptional: ++part.exc; break;
                        case VerdictKind::NotApplicable: ++part.na; break;
                        case VerdictKind::Counterexample:
                            ++part.cex;
                            part.records.push_back({emit_graph6(g), out.reason});
                            break;
                    }
                }
            }
        } catch (...) {
            std::lock_guard<std::mutex> lock(failure_mu);
            if (!failure) failure = std::current_exception();
            next.store(nchunks);
        }
    };

    if (jobs == 1) {
        work();
    } else {
        std::vector<std::thread> threads;
        for (int t = 0; t < jobs; ++t) threads.emplace_back(work);
        for (auto& th : threads) th.join();
    }
    if (failure) std::rethrow_exception(failure);

    // merge in chunk order: identical output regardless of completion order
    VerificationReport rep;
    rep.theorem = theorem_tag(theorem);
    for (const Partial& p : partials) {
        rep.graphs_checked += p.checked;
        rep.witnesses += p.wit;
        rep.exceptional_matches += p.exc;
        rep.not_applicable += p.na;
        rep.counterexamples += p.cex;
        for (const auto& r : p.records) rep.counterexample_list.push_back(r);
    }
    rep.wall_time_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

}  // namespace heavypath
