#pragma once

#include <stdexcept>
#include <vector>

#include "heavypath/graph.hpp"

namespace heavypath {

namespace detail {
inline std::vector<int> index_positions(int n, const std::vector<int>& seq) {
    std::vector<int> pos(n, -1);
    for (size_t i = 0; i < seq.size(); ++i) {
        int v = seq[i];
        if (v < 0 || v >= n) throw std::invalid_argument("sequence: vertex out of range");
        if (pos[v] >= 0) throw std::invalid_argument("sequence: repeated vertex");
        pos[v] = int(i);
    }
    return pos;
}
}  // namespace detail

// Sequence of distinct vertices with consecutive adjacency. Orientation is the
// stored order; successor/predecessor/segment follow it.
class Path {
public:
    Path(const Graph& g, std::vector<int> seq)
        : n_(g.order()), seq_(std::move(seq)), pos_(detail::index_positions(n_, seq_)) {
        if (seq_.empty()) throw std::invalid_argument("Path: empty sequence");
        for (size_t i = 0; i + 1 < seq_.size(); ++i)
            if (!g.has_edge(seq_[i], seq_[i + 1]))
                throw std::invalid_argument("Path: consecutive vertices not adjacent");
    }

    const std::vector<int>& vertices() const { return seq_; }
    int length() const { return int(seq_.size()); }
    int first() const { return seq_.front(); }
    int last() const { return seq_.back(); }

    bool contains(int v) const { return v >= 0 && v < n_ && pos_[v] >= 0; }

    int position(int v) const {
        if (!contains(v)) throw std::invalid_argument("Path: vertex not on path");
        return pos_[v];
    }

    // x+ : undefined for the final vertex
    int successor(int v) const {
        int i = position(v);
        if (i + 1 == length()) throw std::invalid_argument("Path: final vertex has no successor");
        return seq_[i + 1];
    }

    // x- : undefined for the first vertex
    int predecessor(int v) const {
        int i = position(v);
        if (i == 0) throw std::invalid_argument("Path: first vertex has no predecessor");
        return seq_[i - 1];
    }

    // S+ = { x+ : x in S \ {last} }
    VertexSet successors(const VertexSet& s) const {
        VertexSet out(n_);
        s.for_each([&](int v) {
            if (!contains(v)) throw std::invalid_argument("Path: S+ of vertex not on path");
            if (v != last()) out.set(successor(v));
        });
        return out;
    }

    // S- = { x- : x in S \ {first} }
    VertexSet predecessors(const VertexSet& s) const {
        VertexSet out(n_);
        s.for_each([&](int v) {
            if (!contains(v)) throw std::invalid_argument("Path: S- of vertex not on path");
            if (v != first()) out.set(predecessor(v));
        });
        return out;
    }

    // uPv: the segment from u to v, following the path in either direction
    std::vector<int> segment(int u, int v) const {
        int i = position(u), j = position(v);
        std::vector<int> out;
        int step = i <= j ? 1 : -1;
        for (int k = i;; k += step) {
            out.push_back(seq_[k]);
            if (k == j) break;
        }
        return out;
    }

    VertexSet vertex_set() const {
        VertexSet s(n_);
        for (int v : seq_) s.set(v);
        return s;
    }

private:
    int n_;
    std::vector<int> seq_;
    std::vector<int> pos_;
};

// Cyclic order of >= 3 distinct vertices; consecutive and wraparound adjacency.
// "Clockwise" is the stored order.
class Cycle {
public:
    Cycle(const Graph& g, std::vector<int> seq)
        : n_(g.order()), seq_(std::move(seq)), pos_(detail::index_positions(n_, seq_)) {
        if (seq_.size() < 3) throw std::invalid_argument("Cycle: need at least 3 vertices");
        for (size_t i = 0; i < seq_.size(); ++i)
            if (!g.has_edge(seq_[i], seq_[(i + 1) % seq_.size()]))
                throw std::invalid_argument("Cycle: consecutive vertices not adjacent");
    }

    const std::vector<int>& vertices() const { return seq_; }
    int length() const { return int(seq_.size()); }

    bool contains(int v) const { return v >= 0 && v < n_ && pos_[v] >= 0; }

    int position(int v) const {
        if (!contains(v)) throw std::invalid_argument("Cycle: vertex not on cycle");
        return pos_[v];
    }

    int successor(int v) const { return seq_[(position(v) + 1) % length()]; }
    int predecessor(int v) const { return seq_[(position(v) + length() - 1) % length()]; }

    VertexSet successors(const VertexSet& s) const {
        VertexSet out(n_);
        s.for_each([&](int v) { out.set(successor(v)); });
        return out;
    }

    VertexSet predecessors(const VertexSet& s) const {
        VertexSet out(n_);
        s.for_each([&](int v) { out.set(predecessor(v)); });
        return out;
    }

    // u -> v clockwise, endpoints included
    std::vector<int> segment_forward(int u, int v) const {
        std::vector<int> out;
        int k = position(u);
        for (;;) {
            out.push_back(seq_[k]);
            if (seq_[k] == v) break;
            k = (k + 1) % length();
        }
        return out;
    }

    // u -> v counterclockwise, endpoints included
    std::vector<int> segment_backward(int u, int v) const {
        std::vector<int> out;
        int k = position(u);
        for (;;) {
            out.push_back(seq_[k]);
            if (seq_[k] == v) break;
            k = (k + length() - 1) % length();
        }
        return out;
    }

    VertexSet vertex_set() const {
        VertexSet s(n_);
        for (int v : seq_) s.set(v);
        return s;
    }

private:
    int n_;
    std::vector<int> seq_;
    std::vector<int> pos_;
};

}  // namespace heavypath
