#pragma once

#include <vector>

#include "cowkit/certificates.hpp"
#include "cowkit/graph.hpp"

namespace cowkit {

// Size limits for the exact searches. Exceeding a limit raises LimitError;
// nothing is ever approximated silently.
struct OracleLimits {
    int max_vertices = 16;
    int max_biclique_edges = 24;
};

// All maximal independent sets (Bron-Kerbosch with pivoting on the
// complement), sorted by bit row for reproducibility.
std::vector<VertexSet> maximal_independent_sets(const Graph& g);
std::vector<VertexSet> maximal_cliques(const Graph& g);

struct CowResult {
    int width;
    Witness witness;
};

// Exact complete width by iterative deepening over the number of sets;
// candidate sets are maximal independent sets, branching on the first
// uncovered non-adjacent pair.
CowResult exact_cow(const Graph& g, const OracleLimits& limits = {});

struct EccResult {
    int count;
    CliqueCover cover;
};

// Edge clique cover number via the complement: theta_e(G) = cow(complement).
EccResult exact_ecc(const Graph& g, const OracleLimits& limits = {});

// Independent search path for cross-checks: covers the edges of g directly
// by maximal cliques, never touching the complement route.
EccResult exact_ecc_direct(const Graph& g, const OracleLimits& limits = {});

struct BicliqueResult {
    int count;
    BicliqueCover cover;
};

// Exact bipartite dimension with certificate; branching on the first
// uncovered edge over maximal bicliques containing it.
BicliqueResult exact_biclique_cover(const Graph& g, const Bipartition& b,
                                    const OracleLimits& limits = {});

// Deliberately naive cross-check for the primary oracle: candidate sets are
// all independent sets, not just maximal ones. Restricted to n <= 6.
CowResult exact_cow_unrestricted(const Graph& g);

} // namespace cowkit
