#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "heavypath/graph.hpp"

namespace heavypath {

// graph6 interchange, single-byte size field only (1 <= n <= 62).
// Byte 1 = chr(63+n); then the upper triangle in column order
// x(0,1), x(0,2), x(1,2), x(0,3), ... packed 6 bits per byte, MSB first,
// zero-padded. No ">>graph6<<" header.

enum class Graph6ErrorKind {
    Empty,
    BadCharacter,
    UnsupportedSize,
    BadLength,
    TrailingGarbage,
};

class Graph6Error : public std::runtime_error {
public:
    Graph6Error(Graph6ErrorKind kind, size_t offset, const std::string& what)
        : std::runtime_error(what), kind_(kind), offset_(offset) {}

    Graph6ErrorKind kind() const { return kind_; }
    size_t offset() const { return offset_; }

private:
    Graph6ErrorKind kind_;
    size_t offset_;
};

inline constexpr int kGraph6MaxOrder = 62;

inline std::string emit_graph6(const Graph& g) {
    int n = g.order();
    if (n > kGraph6MaxOrder)
        throw std::invalid_argument("emit_graph6: order exceeds 62");
    std::string out;
    out.push_back(char(63 + n));
    int acc = 0, nbits = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            acc = (acc << 1) | (g.has_edge(u, v) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(char(63 + acc));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back(char(63 + (acc << (6 - nbits))));
    return out;
}

inline Graph parse_graph6(std::string_view text) {
    if (text.empty())
        throw Graph6Error(Graph6ErrorKind::Empty, 0, "graph6: empty input");
    for (size_t i = 0; i < text.size(); ++i) {
        unsigned char c = text[i];
        if (c < 63 || c > 126)
            throw Graph6Error(Graph6ErrorKind::BadCharacter, i,
                              "graph6: byte outside 63..126 at offset " + std::to_string(i));
    }
    unsigned char first = text[0];
    if (first == 126)
        throw Graph6Error(Graph6ErrorKind::UnsupportedSize, 0,
                          "graph6: multi-byte size field not supported (n > 62)");
    int n = first - 63;
    if (n < 1)
        throw Graph6Error(Graph6ErrorKind::UnsupportedSize, 0, "graph6: order 0 not supported");
    size_t body = (size_t(n) * (n - 1) / 2 + 5) / 6;
    if (text.size() < 1 + body)
        throw Graph6Error(Graph6ErrorKind::BadLength, text.size(),
                          "graph6: truncated, expected " + std::to_string(1 + body) + " bytes");
    if (text.size() > 1 + body)
        throw Graph6Error(Graph6ErrorKind::TrailingGarbage, 1 + body,
                          "graph6: trailing bytes after encoded graph");
    GraphBuilder gb(n);
    size_t pos = 1;
    int acc = 0, nbits = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            if (nbits == 0) {
                acc = text[pos++] - 63;
                nbits = 6;
            }
            if (acc & (1 << (nbits - 1))) gb.add_edge(u, v);
            --nbits;
        }
    }
    return gb.build();
}

}  // namespace heavypath
