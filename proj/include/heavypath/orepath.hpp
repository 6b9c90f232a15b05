#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "heavypath/graph.hpp"
#include "heavypath/graph6.hpp"
#include "heavypath/path.hpp"

namespace heavypath {

// Vertex sequence where every consecutive pair is an edge or has degree sum
// >= n+1. Deficit 0 means a genuine path.
struct OrePath {
    std::vector<int> seq;
    int deficit = 0;
};

class OrePathError : public std::invalid_argument {
public:
    OrePathError(const std::string& what, int index)
        : std::invalid_argument(what), index_(index) {}

    // first violating position, -1 when the problem is not positional
    int index() const { return index_; }

private:
    int index_;
};

// Unreachable for valid inputs; any occurrence is counterexample-grade.
class RepairStuckError : public std::logic_error {
public:
    RepairStuckError(const Graph& g, const std::vector<int>& seq)
        : std::logic_error("repair: no insertion or crossover available; sequence stuck"),
          graph6_(g.order() <= kGraph6MaxOrder ? emit_graph6(g) : std::string("<n>62>")),
          seq_(seq) {}

    const std::string& graph6() const { return graph6_; }
    const std::vector<int>& sequence() const { return seq_; }

private:
    std::string graph6_;
    std::vector<int> seq_;
};

namespace detail {
inline bool ore_pair_ok(const Graph& g, int u, int v) {
    return g.has_edge(u, v) || g.degree(u) + g.degree(v) >= g.order() + 1;
}

inline int ore_deficit(const Graph& g, const std::vector<int>& seq) {
    int d = 0;
    for (size_t i = 0; i + 1 < seq.size(); ++i)
        if (!g.has_edge(seq[i], seq[i + 1])) ++d;
    return d;
}
}  // namespace detail

inline OrePath validate_ore_path(const Graph& g, const std::vector<int>& seq) {
    if (seq.size() < 2) throw OrePathError("ore path: need at least 2 vertices", -1);
    std::vector<char> seen(g.order(), 0);
    for (size_t i = 0; i < seq.size(); ++i) {
        int v = seq[i];
        if (v < 0 || v >= g.order()) throw OrePathError("ore path: vertex out of range", int(i));
        if (seen[v]) throw OrePathError("ore path: repeated vertex", int(i));
        seen[v] = 1;
    }
    for (size_t i = 0; i + 1 < seq.size(); ++i)
        if (!detail::ore_pair_ok(g, seq[i], seq[i + 1]))
            throw OrePathError(
                "ore path: pair at position " + std::to_string(i) +
                    " is neither an edge nor degree-sum >= n+1",
                int(i));
    return {seq, detail::ore_deficit(g, seq)};
}

struct RepairMove {
    enum Kind { Insert, Crossover };
    Kind kind;
    int gap;    // position i of the leftmost non-edge (v_i, v_i+1) at move time
    int other;  // Insert: the inserted vertex x; Crossover: position j
};

struct RepairResult {
    Path path;
    std::vector<RepairMove> moves;
    int input_deficit = 0;
};

// Turns an ore (u,v)-path into a genuine (u,v)-path containing all its
// vertices. Endpoints must satisfy d(u)+d(v) >= n+1. Deterministic: leftmost
// gap first, insertion before crossover, lowest index breaks ties.
inline RepairResult repair(const Graph& g, const OrePath& p) {
    int n = g.order();
    std::vector<int> seq = validate_ore_path(g, p.seq).seq;
    int u = seq.front(), v = seq.back();
    if (g.degree(u) + g.degree(v) < n + 1)
        throw OrePathError("repair: endpoint degree sum below n+1", -1);

    std::vector<RepairMove> moves;
    int deficit = detail::ore_deficit(g, seq);
    const int input_deficit = deficit;

    while (deficit > 0) {
        int k = int(seq.size());
        int gap = -1;
        for (int i = 0; i + 1 < k; ++i)
            if (!g.has_edge(seq[i], seq[i + 1])) { gap = i; break; }

        int a = seq[gap], b = seq[gap + 1];
        std::vector<char> on_seq(n, 0);
        for (int w : seq) on_seq[w] = 1;

        // move A: common neighbor outside the sequence
        int x = -1;
        for (int w = 0; w < n; ++w)
            if (!on_seq[w] && g.has_edge(a, w) && g.has_edge(b, w)) { x = w; break; }
        if (x >= 0) {
            seq.insert(seq.begin() + gap + 1, x);
            moves.push_back({RepairMove::Insert, gap, x});
        } else {
            // move B: j with (v_j, v_i) and (v_j+1, v_i+1) both edges
            int jj = -1;
            for (int j = 0; j + 1 < k; ++j) {
                if (j >= gap - 1 && j <= gap + 1) continue;
                if (g.has_edge(seq[j], a) && g.has_edge(seq[j + 1], b)) { jj = j; break; }
            }
            if (jj < 0) throw RepairStuckError(g, seq);
            std::vector<int> next;
            next.reserve(k);
            if (jj < gap) {
                for (int t = 0; t <= jj; ++t) next.push_back(seq[t]);
                for (int t = gap; t >= jj + 1; --t) next.push_back(seq[t]);
                for (int t = gap + 1; t < k; ++t) next.push_back(seq[t]);
            } else {
                for (int t = 0; t <= gap; ++t) next.push_back(seq[t]);
                for (int t = jj; t >= gap + 1; --t) next.push_back(seq[t]);
                for (int t = jj + 1; t < k; ++t) next.push_back(seq[t]);
            }
            seq = std::move(next);
            moves.push_back({RepairMove::Crossover, gap, jj});
        }

        // full re-validation after every move: the sequence must stay an ore
        // (u,v)-path and the deficit must strictly decrease
        OrePath check = validate_ore_path(g, seq);
        if (check.deficit >= deficit) throw RepairStuckError(g, seq);
        deficit = check.deficit;
        if (seq.front() != u || seq.back() != v) throw RepairStuckError(g, seq);
    }

    return {Path(g, seq), std::move(moves), input_deficit};
}

inline bool is_heavy_endpoint(const Graph& g, int v) {
    return 2 * g.degree(v) >= g.order() + 1;
}

// (u,v)-path through every vertex of degree >= (n+1)/2, built by repairing the
// ore path u, (heavy vertices in index order), v.
inline RepairResult heavy_path(const Graph& g, int u, int v) {
    int n = g.order();
    if (u == v) throw std::invalid_argument("heavy_path: endpoints must differ");
    if (!is_heavy_endpoint(g, u) || !is_heavy_endpoint(g, v))
        throw OrePathError("heavy_path: endpoint degree below (n+1)/2", -1);
    std::vector<int> seq{u};
    for (int w = 0; w < n; ++w)
        if (w != u && w != v && 2 * g.degree(w) >= n + 1) seq.push_back(w);
    seq.push_back(v);
    return repair(g, validate_ore_path(g, seq));
}

}  // namespace heavypath
