#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cowkit/graph.hpp"

namespace cowkit {

// Named small graph from the catalog.
struct Pattern {
    std::string name;
    Graph graph;
};

// All catalog patterns, built once. Names are part of the CLI contract.
const std::vector<Pattern>& catalog();
const Pattern& pattern(std::string_view name);

// Induced-subgraph embedding: an injective map preserving both adjacency and
// non-adjacency, found by backtracking (most-constrained pattern vertex
// first, host candidates in index order). Returns map[pattern vertex] = host
// vertex, or nothing.
std::optional<std::vector<int>> contains_induced(const Graph& host, const Graph& pat);

bool is_isomorphic(const Graph& a, const Graph& b);

// x-side vertices ordered so that neighborhoods nest: N(v1) <= N(v2) <= ...
struct ChainOrdering {
    std::vector<int> order;
};

// Chain graphs are exactly the 2K2-free bipartite graphs; neighborhoods on
// the x side are totally ordered by inclusion. Ordering is by (degree,
// vertex index).
std::optional<std::pair<Bipartition, ChainOrdering>> chain_ordering(const Graph& g);

struct SplitPartition {
    VertexSet clique_part; // Q, a maximum clique
    VertexSet stable_part; // S
};

// Degree-sequence split recognition; Q is a maximum clique.
std::optional<SplitPartition> split_partition(const Graph& g);

struct PseudoSplitPartition {
    VertexSet clique_part;  // Q, complete to the cycle
    VertexSet stable_part;  // S, anticomplete to the cycle
    std::vector<int> cycle; // induced C5 in cyclic order, or empty
};

// Defined exactly on (2K2, C4)-free graphs; degenerates to a split partition
// when no C5 exists.
std::optional<PseudoSplitPartition> pseudo_split_partition(const Graph& g);

enum class SmallWidth { w0 = 0, w1 = 1, w2 = 2, w3 = 3, more = 4 };

std::string to_string(SmallWidth w);

enum class ClassifyMethod { forbidden, structural };

// Smallest k <= 3 with complete width <= k, or `more`. The forbidden method
// tests the catalog lists; the structural method reduces and searches a
// disjointness labeling. Both agree.
SmallWidth small_width_class(const Graph& g, ClassifyMethod method);

// Names of the forbidden patterns characterizing width <= k, for k in 1..3.
const std::vector<std::string>& forbidden_names(int k);

struct ForbiddenHit {
    std::string name;
    std::vector<int> embedding;
};

// First forbidden pattern of the width-k list occurring induced in g.
std::optional<ForbiddenHit> find_forbidden(const Graph& g, int k);

} // namespace cowkit
