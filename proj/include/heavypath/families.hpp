#pragma once

#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "heavypath/graph.hpp"
#include "heavypath/invariants.hpp"

namespace heavypath {

enum class Family { CycleException, PathException, HLower, HUpper, HClass, K22 };

inline const char* family_name(Family f) {
    switch (f) {
        case Family::CycleException: return "cycle-exception";
        case Family::PathException: return "path-exception";
        case Family::HLower: return "h1xyh2";
        case Family::HUpper: return "h-upper";
        case Family::HClass: return "h-class";
        case Family::K22: return "k22";
    }
    return "?";
}

// Labeled partition of V(G) certifying membership in an exceptional family.
struct FamilyWitness {
    Family family;
    std::map<std::string, std::vector<int>> blocks;
};

// Theorem ranges for the (n, omega) parameter pairs.
inline bool cycle_exception_range(int n, int omega) {
    return 2 * omega >= n + 1 && omega <= n - 2;
}
inline bool path_family_range(int n, int omega) {
    return 2 * omega >= n + 2 && omega <= n - 1;
}

namespace detail {
inline void require_range(bool ok, const char* what) {
    if (!ok) throw std::domain_error(std::string(what) + ": (n, omega) outside the family's range");
}

// K_a v (K_b u K_c-bar) with labeled blocks [A | B | C] in that vertex order.
inline Graph split_family_graph(int a, int b, int c) {
    int n = a + b + c;
    GraphBuilder gb(n);
    for (int u = 0; u < a; ++u)
        for (int v = u + 1; v < n; ++v) gb.add_edge(u, v);
    for (int u = a; u < a + b; ++u)
        for (int v = u + 1; v < a + b; ++v) gb.add_edge(u, v);
    return gb.build();
}
}  // namespace detail

// K_{n-w} v (K_{2w-n} u K-bar_{n-w}), blocks [universal | clique | independent]
inline Graph build_cycle_exception(int n, int omega) {
    detail::require_range(cycle_exception_range(n, omega), "build_cycle_exception");
    return detail::split_family_graph(n - omega, 2 * omega - n, n - omega);
}

// K_{n-w+1} v (K_{2w-n-1} u K-bar_{n-w})
inline Graph build_path_exception(int n, int omega) {
    detail::require_range(path_family_range(n, omega), "build_path_exception");
    return detail::split_family_graph(n - omega + 1, 2 * omega - n - 1, n - omega);
}

// Coalescence of H1 = K_2 v (K_{w-2} u K_1) and the star H2 = K_{1,n-w-1} at
// the degree-2 vertex of H1 / the star center. Fixed labeling [a, b | Q | x | L].
inline Graph build_h1xyh2(int n, int omega) {
    detail::require_range(path_family_range(n, omega), "build_h1xyh2");
    GraphBuilder gb(n);
    int x = omega;  // hubs 0,1; Q = 2..omega-1; leaves omega+1..n-1
    gb.add_edge(0, 1);
    for (int q = 2; q < omega; ++q) {
        gb.add_edge(0, q);
        gb.add_edge(1, q);
        for (int r = q + 1; r < omega; ++r) gb.add_edge(q, r);
    }
    gb.add_edge(0, x);
    gb.add_edge(1, x);
    for (int l = omega + 1; l < n; ++l) gb.add_edge(x, l);
    return gb.build();
}

// K_2 v (K_{w-2} u K_{n-w}), same labeling; the upper bound of the H(n,w) sandwich.
inline Graph build_h_upper(int n, int omega) {
    detail::require_range(path_family_range(n, omega), "build_h_upper");
    GraphBuilder gb(n);
    for (int h = 0; h < 2; ++h)
        for (int v = 2; v < n; ++v) gb.add_edge(h, v);
    gb.add_edge(0, 1);
    for (int q = 2; q < omega; ++q)
        for (int r = q + 1; r < omega; ++r) gb.add_edge(q, r);
    for (int u = omega; u < n; ++u)
        for (int v = u + 1; v < n; ++v) gb.add_edge(u, v);
    return gb.build();
}

// Random member of the H(n,w) sandwich: h1xyh2 plus a random subset of the
// extra edges h_upper allows. Deterministic in the seed.
inline Graph sandwich_sample(int n, int omega, uint64_t seed) {
    Graph lo = build_h1xyh2(n, omega);
    Graph hi = build_h_upper(n, omega);
    std::mt19937_64 rng(seed);
    GraphBuilder gb(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (lo.has_edge(u, v))
                gb.add_edge(u, v);
            else if (hi.has_edge(u, v) && (rng() & 1))
                gb.add_edge(u, v);
        }
    return gb.build();
}

// Is g isomorphic to K_a v (K_b u K_c-bar)? The universal vertices must host
// the K_a block; the remainder must split into a clique and an independent set
// with no cross edges.
inline std::optional<FamilyWitness> recognize_split_family(const Graph& g, int a, int b, int c) {
    int n = g.order();
    if (a < 1 || b < 0 || c < 0) throw std::invalid_argument("recognize_split_family: bad block sizes");
    if (a + b + c != n) throw std::invalid_argument("recognize_split_family: block sizes do not sum to n");

    std::vector<int> universal, blockA, rest;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) == n - 1) universal.push_back(v);
    if (int(universal.size()) < a) return std::nullopt;
    VertexSet in_a(n);
    for (int i = 0; i < a; ++i) {
        blockA.push_back(universal[i]);
        in_a.set(universal[i]);
    }
    for (int v = 0; v < n; ++v)
        if (!in_a.test(v)) rest.push_back(v);

    // degree within the remainder
    std::vector<int> clique_block, indep_block;
    for (int v : rest) {
        int d = 0;
        for (int u : rest)
            if (u != v && g.has_edge(u, v)) ++d;
        (d > 0 ? clique_block : indep_block).push_back(v);
    }
    if (b >= 2) {
        if (int(clique_block.size()) != b) return std::nullopt;
        for (size_t i = 0; i < clique_block.size(); ++i)
            for (size_t j = i + 1; j < clique_block.size(); ++j)
                if (!g.has_edge(clique_block[i], clique_block[j])) return std::nullopt;
    } else {
        if (!clique_block.empty()) return std::nullopt;
        // isolated vertices of the remainder are interchangeable; the lowest ones take the clique block
        for (int i = 0; i < b; ++i) {
            clique_block.push_back(indep_block.front());
            indep_block.erase(indep_block.begin());
        }
    }
    FamilyWitness w{Family::CycleException, {}};
    w.blocks["A"] = blockA;
    w.blocks["B"] = clique_block;
    w.blocks["C"] = indep_block;
    return w;
}

inline std::optional<FamilyWitness> is_cycle_exception(const Graph& g) {
    int n = g.order();
    int omega = max_clique_size(g);
    if (!cycle_exception_range(n, omega)) return std::nullopt;
    auto w = recognize_split_family(g, n - omega, 2 * omega - n, n - omega);
    if (w) w->family = Family::CycleException;
    return w;
}

inline std::optional<FamilyWitness> is_path_exception(const Graph& g) {
    int n = g.order();
    int omega = max_clique_size(g);
    if (!path_family_range(n, omega)) return std::nullopt;
    auto w = recognize_split_family(g, n - omega + 1, 2 * omega - n - 1, n - omega);
    if (w) w->family = Family::PathException;
    return w;
}

// Membership in H(n,w): one labeling whose required edges cover h1xyh2 and
// whose edge set stays inside h_upper. Enumerates hub pairs and the cut vertex
// x; the Q/L split is then forced by adjacency to x.
inline std::optional<FamilyWitness> is_in_h_class(const Graph& g) {
    int n = g.order();
    int omega = max_clique_size(g);
    if (!path_family_range(n, omega)) return std::nullopt;

    for (int a = 0; a < n; ++a) {
        if (g.degree(a) < omega - 1) continue;
        for (int b = a + 1; b < n; ++b) {
            if (!g.has_edge(a, b) || g.degree(b) < omega - 1) continue;
            for (int x = 0; x < n; ++x) {
                if (x == a || x == b) continue;
                if (!g.has_edge(a, x) || !g.has_edge(b, x)) continue;
                std::vector<int> q_block, l_block;
                for (int v = 0; v < n; ++v) {
                    if (v == a || v == b || v == x) continue;
                    (g.has_edge(v, x) ? l_block : q_block).push_back(v);
                }
                if (int(q_block.size()) != omega - 2) continue;
                bool ok = true;
                for (int q : q_block) {
                    if (!g.has_edge(a, q) || !g.has_edge(b, q)) { ok = false; break; }
                    for (int l : l_block)
                        if (g.has_edge(q, l)) { ok = false; break; }
                    if (!ok) break;
                }
                if (!ok) continue;
                for (size_t i = 0; i < q_block.size() && ok; ++i)
                    for (size_t j = i + 1; j < q_block.size(); ++j)
                        if (!g.has_edge(q_block[i], q_block[j])) { ok = false; break; }
                if (!ok) continue;
                FamilyWitness w{Family::HClass, {}};
                w.blocks["hubs"] = {a, b};
                w.blocks["Q"] = q_block;
                w.blocks["x"] = {x};
                w.blocks["L"] = l_block;
                return w;
            }
        }
    }
    return std::nullopt;
}

}  // namespace heavypath
