#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "heavypath/families.hpp"
#include "heavypath/graph.hpp"
#include "heavypath/invariants.hpp"
#include "heavypath/orepath.hpp"
#include "heavypath/path.hpp"

namespace heavypath {

namespace detail {

// all of `targets` reachable from `from` moving only through unvisited vertices
inline bool reachable_through_unvisited(const Graph& g, const std::vector<char>& visited,
                                        int from, const VertexSet& targets) {
    if (targets.none()) return true;
    int n = g.order();
    std::vector<char> seen(n, 0);
    std::vector<int> queue{from};
    seen[from] = 1;
    VertexSet todo = targets;
    todo.reset(from);  // trivially reachable
    for (size_t qi = 0; qi < queue.size() && todo.any(); ++qi) {
        g.for_each_neighbor(queue[qi], [&](int w) {
            if (seen[w]) return;
            seen[w] = 1;
            if (todo.test(w)) todo.reset(w);
            if (!visited[w]) queue.push_back(w);
        });
    }
    return todo.none();
}

struct CycleSearch {
    const Graph& g;
    int anchor;
    VertexSet required;  // still-uncovered required vertices
    std::vector<char> visited;
    std::vector<int> path;

    bool dfs() {
        int cur = path.back();
        if (path.size() >= 3 && required.none() && g.has_edge(cur, anchor)) return true;
        // prune: uncovered required vertices and the anchor must stay reachable
        VertexSet targets = required;
        targets.set(anchor);
        if (!reachable_through_unvisited(g, visited, cur, targets)) return false;
        bool found = false;
        g.for_each_neighbor(cur, [&](int w) {
            if (found || visited[w]) return;
            visited[w] = 1;
            bool was_required = required.test(w);
            if (was_required) required.reset(w);
            path.push_back(w);
            if (dfs()) found = true;
            if (!found) {
                path.pop_back();
                if (was_required) required.set(w);
                visited[w] = 0;
            }
        });
        return found;
    }
};

struct PathSearch {
    const Graph& g;
    int target;
    VertexSet required;
    std::vector<char> visited;
    std::vector<int> path;

    bool dfs() {
        int cur = path.back();
        if (cur == target) return required.none();
        VertexSet targets = required;
        targets.set(target);
        if (!reachable_through_unvisited(g, visited, cur, targets)) return false;
        bool found = false;
        g.for_each_neighbor(cur, [&](int w) {
            if (found || visited[w]) return;
            visited[w] = 1;
            bool was_required = required.test(w);
            if (was_required) required.reset(w);
            path.push_back(w);
            if (dfs()) found = true;
            if (!found) path.pop_back();
            if (!found && was_required) required.set(w);
            if (!found) visited[w] = 0;
        });
        return found;
    }
};

}  // namespace detail

// Exact: a cycle whose vertex set covers `required`, or nullopt. Anchored DFS
// from the lowest required vertex, neighbors in index order. Empty `required`
// returns the first cycle found, or nullopt on forests.
inline std::optional<Cycle> find_cycle_through(const Graph& g, const VertexSet& required) {
    int n = g.order();
    if (required.universe() != n) throw std::invalid_argument("find_cycle_through: universe mismatch");
    if (n < 3) return std::nullopt;
    if (required.none()) {
        for (int v = 0; v < n; ++v) {
            VertexSet one(n);
            one.set(v);
            if (auto c = find_cycle_through(g, one)) return c;
        }
        return std::nullopt;
    }
    int anchor = required.lowest();
    detail::CycleSearch s{g, anchor, required, std::vector<char>(n, 0), {anchor}};
    s.visited[anchor] = 1;
    s.required.reset(anchor);
    if (s.dfs()) return Cycle(g, s.path);
    return std::nullopt;
}

// Exact (u,v)-path covering `required` (u, v included implicitly), or nullopt.
inline std::optional<Path> find_path_through(const Graph& g, int u, int v,
                                             const VertexSet& required) {
    int n = g.order();
    if (u == v) throw std::invalid_argument("find_path_through: endpoints must differ");
    if (required.universe() != n) throw std::invalid_argument("find_path_through: universe mismatch");
    detail::PathSearch s{g, v, required, std::vector<char>(n, 0), {u}};
    s.visited[u] = 1;
    s.required.reset(u);
    s.required.reset(v);
    if (s.dfs()) return Path(g, s.path);
    return std::nullopt;
}

namespace detail {
// exact k-cycle existence: anchor at the cycle's minimum vertex, extend upward
struct FixedLenSearch {
    const Graph& g;
    int anchor, k;
    std::vector<char> visited;
    std::vector<int> path;

    bool dfs() {
        int cur = path.back();
        if (int(path.size()) == k) return g.has_edge(cur, anchor);
        bool found = false;
        g.for_each_neighbor(cur, [&](int w) {
            if (found || w <= anchor || visited[w]) return;
            visited[w] = 1;
            path.push_back(w);
            if (dfs()) found = true;
            path.pop_back();
            visited[w] = 0;
        });
        return found;
    }
};
}  // namespace detail

inline bool has_cycle_of_length(const Graph& g, int k) {
    int n = g.order();
    if (k < 3 || k > n) return false;
    for (int a = 0; a + k <= n; ++a) {
        detail::FixedLenSearch s{g, a, k, std::vector<char>(n, 0), {a}};
        s.visited[a] = 1;
        if (s.dfs()) return true;
    }
    return false;
}

struct PancyclicResult {
    bool pancyclic = false;
    int missing_length = 0;  // first missing length (longest-first scan) when not
};

inline PancyclicResult is_pancyclic(const Graph& g) {
    int n = g.order();
    if (n < 3) return {false, 3};
    for (int k = n; k >= 3; --k)
        if (!has_cycle_of_length(g, k)) return {false, k};
    return {true, 0};
}

inline bool is_hamiltonian(const Graph& g) {
    if (g.order() < 3) return false;
    return find_cycle_through(g, VertexSet::full(g.order())).has_value();
}

struct HamConnResult {
    bool value = false;
    std::pair<int, int> failing_pair{-1, -1};
};

inline HamConnResult is_hamiltonian_connected(const Graph& g) {
    int n = g.order();
    if (n == 1) return {true, {-1, -1}};
    VertexSet all = VertexSet::full(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!find_path_through(g, u, v, all)) return {false, {u, v}};
    return {true, {-1, -1}};
}

// Rotation move: x off the cycle with neighbors z1, z2 on it and z1+ z2+ an
// edge gives the longer cycle x z1 <-C z2+ z1+ ->C z2 x. Applied to a fixpoint.
inline Cycle improve_cycle(const Graph& g, Cycle c) {
    int n = g.order();
    for (;;) {
        bool moved = false;
        for (int x = 0; x < n && !moved; ++x) {
            if (c.contains(x)) continue;
            std::vector<int> nc;
            g.for_each_neighbor(x, [&](int w) {
                if (c.contains(w)) nc.push_back(w);
            });
            for (size_t i = 0; i < nc.size() && !moved; ++i) {
                for (size_t j = 0; j < nc.size() && !moved; ++j) {
                    if (i == j) continue;
                    int z1 = nc[i], z2 = nc[j];
                    if (!g.has_edge(c.successor(z1), c.successor(z2))) continue;
                    std::vector<int> seq{x};
                    auto back = c.segment_backward(z1, c.successor(z2));
                    auto fwd = c.segment_forward(c.successor(z1), z2);
                    seq.insert(seq.end(), back.begin(), back.end());
                    seq.insert(seq.end(), fwd.begin(), fwd.end());
                    c = Cycle(g, seq);
                    moved = true;
                }
            }
        }
        if (!moved) return c;
    }
}

enum class VerdictKind { Witness, Exceptional, NotApplicable, Counterexample };

inline const char* verdict_kind_name(VerdictKind k) {
    switch (k) {
        case VerdictKind::Witness: return "witness";
        case VerdictKind::Exceptional: return "exceptional";
        case VerdictKind::NotApplicable: return "not-applicable";
        case VerdictKind::Counterexample: return "counterexample";
    }
    return "?";
}

struct HeavyVerdict {
    VerdictKind kind;
    std::optional<Cycle> cycle;
    std::optional<Path> path;
    std::optional<FamilyWitness> family;
    std::string reason;
};

inline VertexSet degree_at_least(const Graph& g, int threshold) {
    VertexSet s(g.order());
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) >= threshold) s.set(v);
    return s;
}

// Cycle through all vertices of degree >= n - omega in a 2-connected graph.
inline HeavyVerdict heavy_cycle(const Graph& g) {
    int n = g.order();
    if (!is_two_connected(g))
        return {VerdictKind::NotApplicable, {}, {}, {}, "not 2-connected"};
    int omega = max_clique_size(g);
    if (auto w = is_cycle_exception(g))
        return {VerdictKind::Exceptional, {}, {}, std::move(w), ""};
    VertexSet required = degree_at_least(g, n - omega);
    // rotation-improved seed first, exact search only if it falls short
    if (auto seed = find_cycle_through(g, VertexSet(n))) {
        Cycle grown = improve_cycle(g, *seed);
        if (grown.vertex_set().contains_all(required))
            return {VerdictKind::Witness, std::move(grown), {}, {}, ""};
    }
    if (auto c = find_cycle_through(g, required))
        return {VerdictKind::Witness, std::move(c), {}, {}, ""};
    return {VerdictKind::Counterexample, {}, {}, {}, "no cycle through the heavy set"};
}

// (u,v)-path through all vertices of degree >= n - omega + 1.
inline HeavyVerdict heavy_uv_path(const Graph& g, int u, int v) {
    int n = g.order();
    if (u == v) throw std::invalid_argument("heavy_uv_path: endpoints must differ");
    int omega = max_clique_size(g);
    int threshold = n - omega + 1;
    if (g.degree(u) < threshold || g.degree(v) < threshold)
        return {VerdictKind::NotApplicable, {}, {}, {}, "endpoint degree below n-omega+1"};
    VertexSet required = degree_at_least(g, threshold);
    if (2 * threshold >= n + 1) {
        // the ore-path construction applies directly
        RepairResult r = heavy_path(g, u, v);
        if (!r.path.vertex_set().contains_all(required))
            return {VerdictKind::Counterexample, {}, {}, {}, "constructed path missed a heavy vertex"};
        return {VerdictKind::Witness, {}, std::move(r.path), {}, ""};
    }
    if (auto w = is_path_exception(g))
        return {VerdictKind::Exceptional, {}, {}, std::move(w), ""};
    if (auto w = is_in_h_class(g))
        return {VerdictKind::Exceptional, {}, {}, std::move(w), ""};
    if (auto p = find_path_through(g, u, v, required))
        return {VerdictKind::Witness, {}, std::move(p), {}, ""};
    return {VerdictKind::Counterexample, {}, {}, {}, "no (u,v)-path through the heavy set"};
}

inline bool is_k22(const Graph& g) {
    if (g.order() != 4 || g.edge_count() != 4) return false;
    for (int v = 0; v < 4; ++v)
        if (g.degree(v) != 2) return false;
    return is_bipartite(g).bipartite;
}

inline bool is_balanced_complete_bipartite(const Graph& g) {
    int n = g.order();
    if (n % 2) return false;
    auto bp = is_bipartite(g);
    if (!bp.bipartite) return false;
    long a = 0;
    for (int c : bp.coloring) a += (c == 0);
    return a == n - a && g.edge_count() == a * (n - a);
}

// Pancyclicity under delta + omega >= n in a 2-connected graph.
inline HeavyVerdict pancyclic_verdict(const Graph& g) {
    int n = g.order();
    if (!is_two_connected(g))
        return {VerdictKind::NotApplicable, {}, {}, {}, "not 2-connected"};
    int omega = max_clique_size(g);
    if (min_degree(g) + omega < n)
        return {VerdictKind::NotApplicable, {}, {}, {}, "delta + omega < n"};
    if (is_k22(g)) {
        FamilyWitness w{Family::K22, {}};
        return {VerdictKind::Exceptional, {}, {}, std::move(w), "K_{2,2}"};
    }
    if (auto w = is_cycle_exception(g))
        return {VerdictKind::Exceptional, {}, {}, std::move(w), ""};
    auto pr = is_pancyclic(g);
    if (pr.pancyclic) return {VerdictKind::Witness, {}, {}, {}, "pancyclic"};
    return {VerdictKind::Counterexample, {}, {}, {},
            "missing cycle length " + std::to_string(pr.missing_length)};
}

}  // namespace heavypath
