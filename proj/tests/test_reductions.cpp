#include <doctest.h>

#include "cowkit/oracle.hpp"
#include "cowkit/patterns.hpp"
#include "cowkit/reductions.hpp"
#include "support/testutil.hpp"

using namespace cowkit;
using cowkit::test::random_graph;

namespace {

// Bipartite graph on sides of size a and b from a cross-edge mask.
Graph bip_from_mask(int a, int b, unsigned mask, Bipartition& out) {
    GraphBuilder g(a + b);
    int bit = 0;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j, ++bit)
            if (mask & (1u << bit)) g.add_edge(i, a + j);
    VertexSet xs(a + b), ys(a + b);
    for (int i = 0; i < a; ++i) xs.set(i);
    for (int j = 0; j < b; ++j) ys.set(a + j);
    out = Bipartition{xs, ys};
    return g.build();
}

void check_instance_invariants(const Graph& g, const ReducedInstance& r) {
    CHECK(r.g_prime.order() == g.order() + 2);
    // x apex: adjacent exactly to Y + {y apex}.
    VertexSet expect_x(r.g_prime.order());
    for (int y : r.source_bipartition.y_side) expect_x.set(r.index_map[y]);
    expect_x.set(r.y_apex);
    CHECK(r.g_prime.neighbors(r.x_apex) == expect_x);
    VertexSet expect_y(r.g_prime.order());
    for (int x : r.source_bipartition.x_side) expect_y.set(r.index_map[x]);
    expect_y.set(r.x_apex);
    CHECK(r.g_prime.neighbors(r.y_apex) == expect_y);
    // Restriction to X + Y equals the bipartite complement of the source.
    Graph bc = bipartite_complement(g, r.source_bipartition);
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            CHECK(bc.adjacent(u, v) == r.g_prime.adjacent(r.index_map[u], r.index_map[v]));
    CHECK(source_graph(r) == g);
}

} // namespace

TEST_CASE("single edge reduces to P4") {
    Graph k11 = complete_bipartite(1, 1);
    Bipartition b = *bipartition(k11);
    ReducedInstance r = biclique_to_cow(k11, b, 1);
    CHECK(r.k_prime == 3);
    CHECK(is_isomorphic(r.g_prime, path(4)));
    check_instance_invariants(k11, r);
    CHECK(exact_cow(r.g_prime).width == 3);
    CHECK(exact_biclique_cover(k11, b).count == 1);
}

TEST_CASE("C6 reduces to an 8-vertex instance of width 5") {
    Graph c6 = cycle(6);
    Bipartition b = *bipartition(c6);
    ReducedInstance r = biclique_to_cow(c6, b, 3);
    CHECK(r.g_prime.order() == 8);
    CHECK(r.k_prime == 5);
    check_instance_invariants(c6, r);
    CHECK(exact_cow(r.g_prime).width == 5);
    CHECK(exact_biclique_cover(c6, b).count == 3);
}

TEST_CASE("chordal bipartite sources yield (3K2, C8)-free instances") {
    // C6 itself is not chordal bipartite; a tree and a C4-with-pendants are.
    Graph tree(7, {{0, 1}, {1, 2}, {2, 3}, {1, 4}, {2, 5}, {0, 6}});
    Graph c4p(6, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {1, 4}, {2, 5}});
    for (const Graph& g : {tree, c4p}) {
        ReducedInstance r = biclique_to_cow(g, *bipartition(g), 2);
        CHECK_FALSE(contains_induced(r.g_prime, pattern("3K2").graph));
        CHECK_FALSE(contains_induced(r.g_prime, pattern("C8").graph));
    }
}

TEST_CASE("cover_to_witness") {
    Graph k11 = complete_bipartite(1, 1);
    ReducedInstance r = biclique_to_cow(k11, *bipartition(k11), 1);
    BicliqueCover cover{{Biclique{VertexSet::of(2, {0}), VertexSet::of(2, {1})}}};
    Witness w = cover_to_witness(cover, r);
    CHECK(w.sets.size() == 3);
    CHECK_FALSE(verify_witness(r.g_prime, w));

    Graph c6 = cycle(6);
    Bipartition b6 = *bipartition(c6);
    ReducedInstance r6 = biclique_to_cow(c6, b6, 3);
    auto found = exact_biclique_cover(c6, b6);
    Witness w6 = cover_to_witness(found.cover, r6);
    CHECK(w6.sets.size() == 5);
    CHECK_FALSE(verify_witness(r6.g_prime, w6));

    // Empty-edge source: the two apex sides alone form the witness.
    Bipartition be;
    Graph empty = bip_from_mask(2, 2, 0, be);
    ReducedInstance re = biclique_to_cow(empty, be, 0);
    Witness we = cover_to_witness(BicliqueCover{}, re);
    CHECK(we.sets.size() == 2);
    CHECK_FALSE(verify_witness(re.g_prime, we));
    CHECK(exact_cow(re.g_prime).width == 2);

    // A cover that does not verify on the source is refused.
    BicliqueCover bad{{Biclique{VertexSet::of(2, {0}), VertexSet::of(2, {1})}}};
    CHECK_THROWS_AS(cover_to_witness(bad, re), DomainError);
}

TEST_CASE("witness_to_cover") {
    Graph c6 = cycle(6);
    Bipartition b6 = *bipartition(c6);
    ReducedInstance r6 = biclique_to_cow(c6, b6, 3);
    auto found = exact_biclique_cover(c6, b6);
    Witness w6 = cover_to_witness(found.cover, r6);
    BicliqueCover back = witness_to_cover(w6, r6);
    CHECK(back.bicliques.size() == found.cover.bicliques.size());
    CHECK_FALSE(verify_cover(c6, back));

    // An oracle-found minimum witness translates to a minimum cover.
    Graph k11 = complete_bipartite(1, 1);
    ReducedInstance r = biclique_to_cow(k11, *bipartition(k11), 1);
    auto oracle_w = exact_cow(r.g_prime);
    REQUIRE(oracle_w.width == 3);
    BicliqueCover c = witness_to_cover(oracle_w.witness, r);
    CHECK(c.bicliques.size() == 1);
    CHECK_FALSE(verify_cover(k11, c));

    // Apex sets already in place: normalization is a no-op.
    Witness tidy = cover_to_witness(found.cover, r6);
    BicliqueCover again = witness_to_cover(tidy, r6);
    CHECK(again.bicliques.size() == tidy.sets.size() - 2);

    Witness bogus{{VertexSet(8)}};
    CHECK_THROWS_AS(witness_to_cover(bogus, r6), DomainError);
}

TEST_CASE("equivalence on random bipartite instances") {
    std::mt19937_64 rng(89);
    for (int trial = 0; trial < 80; ++trial) {
        int a = 1 + static_cast<int>(rng() % 3), b = 1 + static_cast<int>(rng() % 3);
        Bipartition bp;
        Graph g = bip_from_mask(a, b, static_cast<unsigned>(rng()), bp);
        ReducedInstance r = biclique_to_cow(g, bp, 0);
        check_instance_invariants(g, r);
        int bd = exact_biclique_cover(g, bp).count;
        CHECK(exact_cow(r.g_prime).width == bd + 2);
    }
}
