#pragma once

#include <vector>

#include "cowkit/certificates.hpp"
#include "cowkit/graph.hpp"

namespace cowkit {

// Output of the biclique-cover -> complete-width transformation: the
// bipartite complement of the source plus two apex vertices, one complete to
// each side. bd(source) <= k iff cow(g_prime) <= k + 2.
struct ReducedInstance {
    Graph g_prime;
    int k_prime;
    int x_apex;
    int y_apex;
    Bipartition source_bipartition; // in source indices
    std::vector<int> index_map;     // source vertex -> g_prime vertex
};

ReducedInstance biclique_to_cow(const Graph& g, const Bipartition& b, int k);

// The source graph is recoverable from the instance: drop the apexes and
// take the bipartite complement again.
Graph source_graph(const ReducedInstance& r);

// Biclique cover of the source -> witness of |cover|+2 sets for g_prime
// (each biclique becomes an independent set, plus the two apex sides).
Witness cover_to_witness(const BicliqueCover& c, const ReducedInstance& r);

// Witness for g_prime -> biclique cover of the source. Normalizes the
// witness first so each apex lives in exactly one set (replaced by the full
// side), drops those two sets, and reads bicliques off the rest.
BicliqueCover witness_to_cover(const Witness& w, const ReducedInstance& r);

} // namespace cowkit
