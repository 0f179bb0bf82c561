#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "cowkit/graph.hpp"

namespace cowkit::test {

// Labeled graph from a bitmask over the upper-triangle pairs (u,v), u<v, in
// lexicographic order.
inline Graph graph_from_mask(int n, uint64_t mask) {
    GraphBuilder b(n);
    int bit = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++bit)
            if (mask & (uint64_t{1} << bit)) b.add_edge(u, v);
    return b.build();
}

inline uint64_t mask_count(int n) { return uint64_t{1} << (n * (n - 1) / 2); }

// Calls f(graph) for every labeled graph on n vertices.
template <typename F> void for_all_graphs(int n, F&& f) {
    for (uint64_t mask = 0; mask < mask_count(n); ++mask) f(graph_from_mask(n, mask));
}

inline Graph random_graph(std::mt19937_64& rng, int n, double p) {
    GraphBuilder b(n);
    std::bernoulli_distribution coin(p);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) b.add_edge(u, v);
    return b.build();
}

// Grows an independent set to a maximal one, smallest vertex first.
inline VertexSet grow_to_maximal(const Graph& g, VertexSet s) {
    for (int v = 0; v < g.order(); ++v) {
        if (s.test(v)) continue;
        if (!g.neighbors(v).intersects(s)) s.set(v);
    }
    return s;
}

// Independently written graph6 codec used only as a cross-check: goes
// through an explicit '0'/'1' character string instead of bit arithmetic.
inline std::string ref_emit_graph6(const Graph& g) {
    int n = g.order();
    std::string out;
    if (n < 63) {
        out.push_back(static_cast<char>(63 + n));
    } else {
        out.push_back('~');
        std::string bits18;
        for (int i = 17; i >= 0; --i) bits18.push_back((n >> i) & 1 ? '1' : '0');
        for (int c = 0; c < 3; ++c) {
            int v = 0;
            for (int i = 0; i < 6; ++i) v = v * 2 + (bits18[c * 6 + i] == '1');
            out.push_back(static_cast<char>(63 + v));
        }
    }
    std::string bits;
    for (int col = 1; col < n; ++col)
        for (int row = 0; row < col; ++row) bits.push_back(g.adjacent(row, col) ? '1' : '0');
    while (bits.size() % 6) bits.push_back('0');
    for (size_t at = 0; at < bits.size(); at += 6) {
        int v = 0;
        for (int i = 0; i < 6; ++i) v = v * 2 + (bits[at + i] == '1');
        out.push_back(static_cast<char>(63 + v));
    }
    return out;
}

inline Graph ref_parse_graph6(const std::string& s) {
    size_t at = 0;
    long n;
    if (s.at(0) != '~') {
        n = s.at(0) - 63;
        at = 1;
    } else {
        n = 0;
        for (int c = 1; c <= 3; ++c) n = n * 64 + (s.at(c) - 63);
        at = 4;
    }
    std::string bits;
    for (; at < s.size(); ++at) {
        int v = s.at(at) - 63;
        for (int i = 5; i >= 0; --i) bits.push_back((v >> i) & 1 ? '1' : '0');
    }
    GraphBuilder b(static_cast<int>(n));
    size_t pos = 0;
    for (int col = 1; col < n; ++col)
        for (int row = 0; row < col; ++row)
            if (bits.at(pos++) == '1') b.add_edge(row, col);
    return b.build();
}

} // namespace cowkit::test
