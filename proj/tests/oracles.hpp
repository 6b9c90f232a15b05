// Test-only brute-force oracles, kept independent of the library's search and
// recognizer code paths: subset enumeration and permutation checks only.
#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <vector>

#include "heavypath/families.hpp"
#include "heavypath/graph.hpp"

namespace oracles {

using heavypath::Graph;
using heavypath::VertexSet;

inline int brute_max_clique(const Graph& g) {
    int n = g.order();
    int best = 0;
    for (uint32_t s = 1; s < (1u << n); ++s) {
        bool clique = true;
        for (int u = 0; u < n && clique; ++u) {
            if (!(s >> u & 1)) continue;
            for (int v = u + 1; v < n && clique; ++v)
                if ((s >> v & 1) && !g.has_edge(u, v)) clique = false;
        }
        if (clique) best = std::max(best, std::popcount(s));
    }
    return best;
}

inline bool connected_on(const Graph& g, uint32_t mask) {
    if (!mask) return true;
    int start = std::countr_zero(mask);
    uint32_t seen = 1u << start;
    std::vector<int> stack{start};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        g.for_each_neighbor(v, [&](int u) {
            if ((mask >> u & 1) && !(seen >> u & 1)) {
                seen |= 1u << u;
                stack.push_back(u);
            }
        });
    }
    return seen == mask;
}

// definition-level check: connected, n >= 3, and every single-vertex removal
// leaves a connected graph
inline bool brute_two_connected(const Graph& g) {
    int n = g.order();
    if (n < 3) return false;
    uint32_t all = (1u << n) - 1;
    if (!connected_on(g, all)) return false;
    for (int v = 0; v < n; ++v)
        if (!connected_on(g, all & ~(1u << v))) return false;
    return true;
}

// all permutations of all supersets of `required`: is there a path (u,v)
// covering required? Exhaustive, no pruning.
inline bool brute_path_through(const Graph& g, int u, int v, uint32_t required) {
    int n = g.order();
    uint32_t need = required | (1u << u) | (1u << v);
    for (uint32_t s = 0; s < (1u << n); ++s) {
        if ((s & need) != need) continue;
        std::vector<int> verts;
        for (int w = 0; w < n; ++w)
            if (s >> w & 1) verts.push_back(w);
        std::sort(verts.begin(), verts.end());
        do {
            if (verts.front() != u || verts.back() != v) continue;
            bool ok = true;
            for (size_t i = 0; i + 1 < verts.size() && ok; ++i)
                if (!g.has_edge(verts[i], verts[i + 1])) ok = false;
            if (ok) return true;
        } while (std::next_permutation(verts.begin(), verts.end()));
    }
    return false;
}

inline bool brute_cycle_through(const Graph& g, uint32_t required) {
    int n = g.order();
    for (uint32_t s = 0; s < (1u << n); ++s) {
        if ((s & required) != required) continue;
        if (std::popcount(s) < 3) continue;
        std::vector<int> verts;
        for (int w = 0; w < n; ++w)
            if (s >> w & 1) verts.push_back(w);
        // fix the minimum vertex first to cut rotations
        std::vector<int> rest(verts.begin() + 1, verts.end());
        std::sort(rest.begin(), rest.end());
        do {
            bool ok = g.has_edge(verts[0], rest.front()) && g.has_edge(verts[0], rest.back());
            for (size_t i = 0; i + 1 < rest.size() && ok; ++i)
                if (!g.has_edge(rest[i], rest[i + 1])) ok = false;
            if (ok) return true;
        } while (std::next_permutation(rest.begin(), rest.end()));
    }
    return false;
}

// sandwich membership by raw labeling search: some permutation maps g onto a
// graph containing h1xyh2 and contained in h_upper, block layout fixed
inline bool brute_h_class(const Graph& g) {
    int n = g.order();
    int omega = brute_max_clique(g);
    if (!heavypath::path_family_range(n, omega)) return false;
    Graph lo = heavypath::build_h1xyh2(n, omega);
    Graph hi = heavypath::build_h_upper(n, omega);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            for (int j = i + 1; j < n && ok; ++j) {
                bool have = g.has_edge(perm[i], perm[j]);
                if (lo.has_edge(i, j) && !have) ok = false;
                if (have && !hi.has_edge(i, j)) ok = false;
            }
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

// isomorphism by permutation search, desk-scale orders only
inline bool brute_isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
    int n = a.order();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            for (int j = i + 1; j < n && ok; ++j)
                if (a.has_edge(i, j) != b.has_edge(perm[i], perm[j])) ok = false;
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

}  // namespace oracles
