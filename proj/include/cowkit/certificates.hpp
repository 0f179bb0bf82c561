#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cowkit/graph.hpp"

namespace cowkit {

// Ordered list of independent sets certifying a complete-width bound: every
// non-adjacent pair must co-occur in some set.
struct Witness {
    std::vector<VertexSet> sets;
};

struct CliqueCover {
    std::vector<VertexSet> cliques;
};

struct Biclique {
    VertexSet x_part;
    VertexSet y_part;
};

struct BicliqueCover {
    std::vector<Biclique> bicliques;
};

// Violations are values, not errors; the first offending set or pair is
// reported.
struct Violation {
    enum class Kind { set_not_independent, set_not_clique, pair_uncovered, edge_uncovered, malformed };
    Kind kind;
    int set_index = -1;
    int u = -1, v = -1;
    std::string message;
};

std::optional<Violation> verify_witness(const Graph& g, const Witness& w);
std::optional<Violation> verify_cover(const Graph& g, const CliqueCover& c);
std::optional<Violation> verify_cover(const Graph& g, const BicliqueCover& c);

} // namespace cowkit
