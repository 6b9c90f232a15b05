#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace heavypath {

// Subset of the vertices 0..n-1 of an associated graph, stored as a bit mask.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int n) : n_(n), w_(words_for(n), 0) {
        if (n < 0) throw std::invalid_argument("VertexSet: negative universe");
    }

    static VertexSet full(int n) {
        VertexSet s(n);
        for (auto& w : s.w_) w = ~0ULL;
        s.trim();
        return s;
    }

    static VertexSet of(int n, std::initializer_list<int> vs) {
        VertexSet s(n);
        for (int v : vs) s.set(v);
        return s;
    }

    int universe() const { return n_; }

    bool test(int v) const {
        check(v);
        return (w_[v >> 6] >> (v & 63)) & 1ULL;
    }
    void set(int v) {
        check(v);
        w_[v >> 6] |= 1ULL << (v & 63);
    }
    void reset(int v) {
        check(v);
        w_[v >> 6] &= ~(1ULL << (v & 63));
    }

    int count() const {
        int c = 0;
        for (uint64_t w : w_) c += std::popcount(w);
        return c;
    }
    bool any() const {
        for (uint64_t w : w_)
            if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    VertexSet& operator&=(const VertexSet& o) {
        same_universe(o);
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }
    VertexSet& operator|=(const VertexSet& o) {
        same_universe(o);
        for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    // set difference
    VertexSet& operator-=(const VertexSet& o) {
        same_universe(o);
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
        return *this;
    }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    bool operator==(const VertexSet& o) const = default;

    bool contains_all(const VertexSet& o) const {
        same_universe(o);
        for (size_t i = 0; i < w_.size(); ++i)
            if (o.w_[i] & ~w_[i]) return false;
        return true;
    }
    bool intersects(const VertexSet& o) const {
        same_universe(o);
        for (size_t i = 0; i < w_.size(); ++i)
            if (o.w_[i] & w_[i]) return true;
        return false;
    }

    int lowest() const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i]) return int(i) * 64 + std::countr_zero(w_[i]);
        return -1;
    }

    template <class F>
    void for_each(F f) const {
        for (size_t i = 0; i < w_.size(); ++i) {
            uint64_t w = w_[i];
            while (w) {
                f(int(i) * 64 + std::countr_zero(w));
                w &= w - 1;
            }
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(count());
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

private:
    static int words_for(int n) { return (n + 63) >> 6; }
    void check(int v) const {
        if (v < 0 || v >= n_) throw std::out_of_range("VertexSet: vertex out of range");
    }
    void same_universe(const VertexSet& o) const {
        if (n_ != o.n_) throw std::invalid_argument("VertexSet: universe mismatch");
    }
    void trim() {
        if (n_ & 63) w_.back() &= (1ULL << (n_ & 63)) - 1;
    }

    int n_ = 0;
    std::vector<uint64_t> w_;
};

class GraphBuilder;

// Immutable simple undirected graph. Adjacency is n rows of n bits; row v is
// the neighborhood mask of v. Symmetric, zero diagonal.
class Graph {
public:
    static constexpr int kMaxOrder = 4096;

    static Graph empty(int n) {
        if (n < 1) throw std::invalid_argument("Graph: order must be >= 1");
        if (n > kMaxOrder) throw std::invalid_argument("Graph: order exceeds supported maximum");
        return Graph(n);
    }

    int order() const { return n_; }
    int words() const { return words_; }

    bool has_edge(int u, int v) const {
        check(u);
        check(v);
        return (bits_[size_t(u) * words_ + (v >> 6)] >> (v & 63)) & 1ULL;
    }

    int degree(int v) const {
        check(v);
        int d = 0;
        const uint64_t* r = row(v);
        for (int i = 0; i < words_; ++i) d += std::popcount(r[i]);
        return d;
    }

    long edge_count() const {
        long s = 0;
        for (int v = 0; v < n_; ++v) s += degree(v);
        return s / 2;
    }

    const uint64_t* row(int v) const { return bits_.data() + size_t(v) * words_; }

    // single-word fast path, valid when order <= 64
    uint64_t row_word(int v) const { return bits_[size_t(v) * words_]; }

    VertexSet neighbors(int v) const {
        check(v);
        VertexSet s(n_);
        for_each_neighbor(v, [&](int u) { s.set(u); });
        return s;
    }

    template <class F>
    void for_each_neighbor(int v, F f) const {
        const uint64_t* r = row(v);
        for (int i = 0; i < words_; ++i) {
            uint64_t w = r[i];
            while (w) {
                f(i * 64 + std::countr_zero(w));
                w &= w - 1;
            }
        }
    }

    Graph with_edge(int u, int v) const {
        Graph g = *this;
        g.set_edge(u, v);
        return g;
    }

    bool operator==(const Graph& o) const = default;

private:
    explicit Graph(int n) : n_(n), words_((n + 63) >> 6), bits_(size_t(n) * words_, 0) {}

    void check(int v) const {
        if (v < 0 || v >= n_) throw std::out_of_range("Graph: vertex out of range");
    }
    void set_edge(int u, int v) {
        check(u);
        check(v);
        if (u == v) throw std::invalid_argument("Graph: loops are not allowed");
        bits_[size_t(u) * words_ + (v >> 6)] |= 1ULL << (v & 63);
        bits_[size_t(v) * words_ + (u >> 6)] |= 1ULL << (u & 63);
    }

    friend class GraphBuilder;

    int n_ = 0;
    int words_ = 0;
    std::vector<uint64_t> bits_;
};

// Single-threaded builder; the finished Graph is immutable and shareable.
class GraphBuilder {
public:
    explicit GraphBuilder(int n) : g_(Graph::empty(n)) {}

    GraphBuilder& add_edge(int u, int v) {
        g_.set_edge(u, v);
        return *this;
    }

    Graph build() { return std::move(g_); }

private:
    Graph g_;
};

inline Graph add_edge(const Graph& g, int u, int v) { return g.with_edge(u, v); }

// a's vertices first, then b's; all cross edges added
inline Graph join(const Graph& a, const Graph& b) {
    int n = a.order() + b.order();
    if (n > Graph::kMaxOrder) throw std::invalid_argument("join: combined order too large");
    GraphBuilder gb(n);
    for (int u = 0; u < a.order(); ++u)
        for (int v = u + 1; v < a.order(); ++v)
            if (a.has_edge(u, v)) gb.add_edge(u, v);
    int off = a.order();
    for (int u = 0; u < b.order(); ++u)
        for (int v = u + 1; v < b.order(); ++v)
            if (b.has_edge(u, v)) gb.add_edge(off + u, off + v);
    for (int u = 0; u < a.order(); ++u)
        for (int v = 0; v < b.order(); ++v) gb.add_edge(u, off + v);
    return gb.build();
}

inline Graph disjoint_union(const Graph& a, const Graph& b) {
    int n = a.order() + b.order();
    if (n > Graph::kMaxOrder) throw std::invalid_argument("disjoint_union: combined order too large");
    GraphBuilder gb(n);
    for (int u = 0; u < a.order(); ++u)
        for (int v = u + 1; v < a.order(); ++v)
            if (a.has_edge(u, v)) gb.add_edge(u, v);
    int off = a.order();
    for (int u = 0; u < b.order(); ++u)
        for (int v = u + 1; v < b.order(); ++v)
            if (b.has_edge(u, v)) gb.add_edge(off + u, off + v);
    return gb.build();
}

inline Graph complement(const Graph& g) {
    GraphBuilder gb(g.order());
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (!g.has_edge(u, v)) gb.add_edge(u, v);
    return gb.build();
}

// Returns the induced subgraph together with the old->new index map
// (entries for vertices outside s are -1).
inline std::pair<Graph, std::vector<int>> induced_subgraph(const Graph& g, const VertexSet& s) {
    if (s.universe() != g.order()) throw std::invalid_argument("induced_subgraph: universe mismatch");
    if (s.none()) throw std::invalid_argument("induced_subgraph: empty vertex set");
    std::vector<int> map(g.order(), -1);
    int k = 0;
    s.for_each([&](int v) { map[v] = k++; });
    GraphBuilder gb(k);
    s.for_each([&](int u) {
        s.for_each([&](int v) {
            if (u < v && g.has_edge(u, v)) gb.add_edge(map[u], map[v]);
        });
    });
    return {gb.build(), std::move(map)};
}

inline Graph complete_graph(int n) {
    GraphBuilder gb(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) gb.add_edge(u, v);
    return gb.build();
}

inline Graph complete_bipartite(int a, int b) {
    GraphBuilder gb(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) gb.add_edge(u, a + v);
    return gb.build();
}

inline Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle_graph: need n >= 3");
    GraphBuilder gb(n);
    for (int v = 0; v < n; ++v) gb.add_edge(v, (v + 1) % n);
    return gb.build();
}

inline Graph path_graph(int n) {
    GraphBuilder gb(n);
    for (int v = 0; v + 1 < n; ++v) gb.add_edge(v, v + 1);
    return gb.build();
}

// Edge-list text format: first line "n m", then m lines "u v" with u < v.
inline std::string emit_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.order() << ' ' << g.edge_count() << '\n';
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (g.has_edge(u, v)) out << u << ' ' << v << '\n';
    return out.str();
}

inline Graph parse_edge_list(std::istream& in) {
    int n, m;
    if (!(in >> n >> m)) throw std::runtime_error("edge list: bad header, expected \"n m\"");
    GraphBuilder gb(n);
    for (int i = 0; i < m; ++i) {
        int u, v;
        if (!(in >> u >> v)) throw std::runtime_error("edge list: truncated edge line");
        if (u >= v) throw std::runtime_error("edge list: edges must satisfy u < v");
        gb.add_edge(u, v);
    }
    return gb.build();
}

inline Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    return parse_edge_list(in);
}

}  // namespace heavypath
