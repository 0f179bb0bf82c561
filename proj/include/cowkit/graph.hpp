#pragma once

#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cowkit/bitset.hpp"
#include "cowkit/errors.hpp"

namespace cowkit {

using VertexSet = Bitset;

// Immutable simple undirected graph on vertices 0..n-1. Adjacency is kept as
// one bit row per vertex; rows are symmetric, irreflexive, and trimmed to n
// bits. Labels are optional display names and do not take part in equality.
class Graph {
public:
    Graph() = default;

    explicit Graph(int n) : n_(n), rows_(n, VertexSet(n)) {
        if (n < 0) throw DomainError("negative vertex count");
    }

    Graph(int n, std::span<const std::pair<int, int>> edges) : Graph(n) {
        for (auto [u, v] : edges) add_edge_checked(u, v);
    }

    Graph(int n, std::initializer_list<std::pair<int, int>> edges) : Graph(n) {
        for (auto [u, v] : edges) add_edge_checked(u, v);
    }

    int order() const { return n_; }

    bool adjacent(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return u != v && rows_[u].test(v);
    }

    const VertexSet& neighbors(int v) const {
        check_vertex(v);
        return rows_[v];
    }

    int degree(int v) const { return neighbors(v).count(); }

    long edge_count() const {
        long twice = 0;
        for (const auto& row : rows_) twice += row.count();
        return twice / 2;
    }

    std::vector<std::pair<int, int>> edge_list() const {
        std::vector<std::pair<int, int>> out;
        for (int u = 0; u < n_; ++u)
            for (int v = rows_[u].next(u); v >= 0; v = rows_[u].next(v))
                out.emplace_back(u, v);
        return out;
    }

    // Structural equality; labels are ignored.
    bool operator==(const Graph& o) const { return n_ == o.n_ && rows_ == o.rows_; }

    const std::vector<std::string>& labels() const { return labels_; }
    void set_labels(std::vector<std::string> labels) {
        if (!labels.empty() && static_cast<int>(labels.size()) != n_)
            throw DomainError("label table size does not match vertex count");
        labels_ = std::move(labels);
    }

    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw DomainError("vertex " + std::to_string(v) + " out of range");
    }

    void check_subset(const VertexSet& s) const {
        if (s.capacity() != n_) throw DomainError("vertex set capacity does not match graph");
    }

private:
    friend class GraphBuilder;

    void add_edge_checked(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw DomainError("self-loop at vertex " + std::to_string(u));
        rows_[u].set(v);
        rows_[v].set(u);
    }

    int n_ = 0;
    std::vector<VertexSet> rows_;
    std::vector<std::string> labels_;
};

// Construction site for graphs. Graphs themselves stay immutable values;
// anything that needs to accumulate edges goes through a builder.
class GraphBuilder {
public:
    explicit GraphBuilder(int n) : g_(n) {}

    void add_edge(int u, int v) { g_.add_edge_checked(u, v); }
    bool has_edge(int u, int v) const { return g_.adjacent(u, v); }
    int order() const { return g_.order(); }

    Graph build() { return std::move(g_); }

private:
    Graph g_;
};

struct Bipartition {
    VertexSet x_side;
    VertexSet y_side;
};

// -- basic constructions ----------------------------------------------------

Graph edgeless(int n);
Graph complete(int n);
Graph path(int n);
Graph cycle(int n);
Graph complete_bipartite(int a, int b);

// -- operations --------------------------------------------------------------

// Open neighborhood N(v), checked.
VertexSet neighborhood(const Graph& g, int v);

Graph complement(const Graph& g);

struct InducedSubgraph {
    Graph graph;
    std::vector<int> origin; // origin[new index] = old index
};
InducedSubgraph induced(const Graph& g, const VertexSet& s);

bool is_independent(const Graph& g, const VertexSet& s);
bool is_clique(const Graph& g, const VertexSet& s);

VertexSet universal_vertices(const Graph& g);

// Partition of the vertices into classes of identical open neighborhood.
// Classes are reported in order of their smallest member; singletons
// included. Two distinct vertices sharing a class are never adjacent.
std::vector<VertexSet> false_twin_classes(const Graph& g);

enum class ComposeMode { disjoint_union, join };
Graph compose(const Graph& a, const Graph& b, ComposeMode mode);

struct Substitution {
    Graph graph;
    std::vector<int> offset; // part i occupies [offset[i], offset[i] + parts[i].order())
};
Substitution substitute(const Graph& g, std::span<const Graph> parts);

// 2-coloring if g is bipartite. Components are colored in order of their
// smallest vertex, root on the x side; isolated vertices always go to the
// x side.
std::optional<Bipartition> bipartition(const Graph& g);

bool valid_bipartition(const Graph& g, const Bipartition& b);

// Complement across the bipartition only; both sides stay independent.
Graph bipartite_complement(const Graph& g, const Bipartition& b);

} // namespace cowkit
