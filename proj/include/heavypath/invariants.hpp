#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <vector>

#include "heavypath/graph.hpp"

namespace heavypath {

namespace detail {

// Exact maximum-clique size, branch and bound with a greedy coloring bound.
// Single-word kernel, n <= 64.
struct MaxCliqueU64 {
    const uint64_t* rows;
    int best = 0;

    void expand(uint64_t cand, int size) {
        if (!cand) {
            if (size > best) best = size;
            return;
        }
        if (size + std::popcount(cand) <= best) return;
        std::array<int8_t, 64> order{}, color{};
        int cnt = 0, col = 0;
        uint64_t uncolored = cand;
        while (uncolored) {
            ++col;
            uint64_t avail = uncolored;
            while (avail) {
                int v = std::countr_zero(avail);
                avail &= ~(rows[v] | (1ULL << v));
                uncolored &= ~(1ULL << v);
                order[cnt] = int8_t(v);
                color[cnt] = int8_t(col);
                ++cnt;
            }
        }
        for (int i = cnt - 1; i >= 0; --i) {
            if (size + color[i] <= best) return;
            int v = order[i];
            expand(cand & rows[v], size + 1);
            cand &= ~(1ULL << v);
        }
    }
};

inline int max_clique_size_u64(const Graph& g, uint64_t cand) {
    std::array<uint64_t, 64> rows;
    for (int v = 0; v < g.order(); ++v) rows[v] = g.row_word(v);
    MaxCliqueU64 mc{rows.data()};
    mc.expand(cand, 0);
    return mc.best;
}

// Multi-word fallback for n > 64. Same algorithm over VertexSet.
struct MaxCliqueWide {
    const Graph& g;
    int best = 0;

    void expand(const VertexSet& cand, int size) {
        if (cand.none()) {
            if (size > best) best = size;
            return;
        }
        if (size + cand.count() <= best) return;
        std::vector<int> order;
        std::vector<int> color;
        VertexSet uncolored = cand;
        int col = 0;
        while (uncolored.any()) {
            ++col;
            VertexSet avail = uncolored;
            while (avail.any()) {
                int v = avail.lowest();
                avail.reset(v);
                avail -= g.neighbors(v);
                uncolored.reset(v);
                order.push_back(v);
                color.push_back(col);
            }
        }
        VertexSet rest = cand;
        for (int i = int(order.size()) - 1; i >= 0; --i) {
            if (size + color[i] <= best) return;
            int v = order[i];
            expand(rest & g.neighbors(v), size + 1);
            rest.reset(v);
        }
    }
};

inline int max_clique_size_in(const Graph& g, const VertexSet& cand) {
    if (g.words() == 1) {
        uint64_t m = 0;
        cand.for_each([&](int v) { m |= 1ULL << v; });
        return max_clique_size_u64(g, m);
    }
    MaxCliqueWide mc{g};
    mc.expand(cand, 0);
    return mc.best;
}

}  // namespace detail

struct CliqueResult {
    int omega = 0;
    VertexSet witness;  // lexicographically smallest maximum clique
};

inline int max_clique_size(const Graph& g) {
    return detail::max_clique_size_in(g, VertexSet::full(g.order()));
}

inline CliqueResult clique_number(const Graph& g) {
    int n = g.order();
    int omega = max_clique_size(g);
    // lexicographically smallest witness: take each vertex iff still feasible
    VertexSet chosen(n);
    VertexSet cand = VertexSet::full(n);
    int need = omega;
    for (int v = 0; v < n && need > 0; ++v) {
        if (!cand.test(v)) continue;
        VertexSet sub = cand & g.neighbors(v);
        if (detail::max_clique_size_in(g, sub) >= need - 1) {
            chosen.set(v);
            cand = sub;
            --need;
        } else {
            cand.reset(v);
        }
    }
    return {omega, chosen};
}

inline int min_degree(const Graph& g) {
    int d = g.order();
    for (int v = 0; v < g.order(); ++v) d = std::min(d, g.degree(v));
    return d;
}

inline long edge_count(const Graph& g) { return g.edge_count(); }

inline int component_count(const Graph& g) {
    int n = g.order();
    std::vector<char> seen(n, 0);
    std::vector<int> stack;
    int comps = 0;
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        ++comps;
        seen[s] = 1;
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            g.for_each_neighbor(v, [&](int u) {
                if (!seen[u]) {
                    seen[u] = 1;
                    stack.push_back(u);
                }
            });
        }
    }
    return comps;
}

inline bool is_connected(const Graph& g) { return component_count(g) == 1; }

// n >= 3, connected, and no articulation vertex (lowpoint computation).
// By convention K_1 and K_2 are not 2-connected.
inline bool is_two_connected(const Graph& g) {
    int n = g.order();
    if (n < 3) return false;
    std::vector<int> num(n, -1), low(n, 0), parent(n, -1);
    std::vector<int> stack;
    int counter = 0;
    int root_children = 0;
    // iterative DFS from vertex 0
    std::vector<std::pair<int, int>> frames;  // (vertex, neighbor cursor state unused)
    std::vector<std::vector<int>> adj(n);
    for (int v = 0; v < n; ++v) g.for_each_neighbor(v, [&](int u) { adj[v].push_back(u); });
    std::vector<size_t> it(n, 0);
    num[0] = low[0] = counter++;
    stack.push_back(0);
    bool articulation = false;
    while (!stack.empty()) {
        int v = stack.back();
        if (it[v] < adj[v].size()) {
            int u = adj[v][it[v]++];
            if (num[u] < 0) {
                parent[u] = v;
                num[u] = low[u] = counter++;
                if (v == 0) ++root_children;
                stack.push_back(u);
            } else if (u != parent[v]) {
                low[v] = std::min(low[v], num[u]);
            }
        } else {
            stack.pop_back();
            int p = parent[v];
            if (p >= 0) {
                low[p] = std::min(low[p], low[v]);
                if (p != 0 && low[v] >= num[p]) articulation = true;
            }
        }
    }
    if (counter != n) return false;  // disconnected
    return !(articulation || root_children > 1);
}

struct BipartiteResult {
    bool bipartite = false;
    std::vector<int> coloring;  // 0/1 per vertex when bipartite
    std::vector<int> odd_walk;  // closed walk of odd length when not
};

inline BipartiteResult is_bipartite(const Graph& g) {
    int n = g.order();
    std::vector<int> color(n, -1), parent(n, -1);
    for (int s = 0; s < n; ++s) {
        if (color[s] >= 0) continue;
        color[s] = 0;
        std::vector<int> queue{s};
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            int v = queue[qi];
            int conflict = -1;
            g.for_each_neighbor(v, [&](int u) {
                if (color[u] < 0) {
                    color[u] = 1 - color[v];
                    parent[u] = v;
                    queue.push_back(u);
                } else if (color[u] == color[v] && conflict < 0) {
                    conflict = u;
                }
            });
            if (conflict >= 0) {
                // closed walk root..v, conflict..(below root), wrapping to root:
                // odd edge count since v and conflict sit at depths of equal parity
                std::vector<int> up_v, up_u;
                for (int x = v; x >= 0; x = parent[x]) up_v.push_back(x);
                for (int x = conflict; parent[x] >= 0; x = parent[x]) up_u.push_back(x);
                std::vector<int> walk(up_v.rbegin(), up_v.rend());
                walk.insert(walk.end(), up_u.begin(), up_u.end());
                return {false, {}, std::move(walk)};
            }
        }
    }
    return {true, std::move(color), {}};
}

}  // namespace heavypath
