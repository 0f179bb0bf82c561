#include <doctest.h>

#include "cowkit/fpt.hpp"
#include "cowkit/graph.hpp"
#include "cowkit/oracle.hpp"
#include "cowkit/patterns.hpp"
#include "support/testutil.hpp"

using namespace cowkit;
using cowkit::test::for_all_graphs;
using cowkit::test::graph_from_mask;
using cowkit::test::random_graph;

TEST_CASE("neighborhood basics") {
    Graph c4 = cycle(4);
    CHECK(neighborhood(c4, 0) == VertexSet::of(4, {1, 3}));
    CHECK(neighborhood(complete(3), 0) == VertexSet::of(3, {1, 2}));
    CHECK(neighborhood(edgeless(3), 0).empty());
    CHECK_THROWS_AS(neighborhood(c4, 4), DomainError);
    CHECK_THROWS_AS(neighborhood(c4, -1), DomainError);
}

TEST_CASE("complement identities") {
    CHECK(complement(cycle(4)) == Graph(4, {{0, 2}, {1, 3}}));
    CHECK(complement(complete(3)) == edgeless(3));
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        Graph g = random_graph(rng, 3 + trial % 6, 0.5);
        CHECK(complement(complement(g)) == g);
    }
}

TEST_CASE("induced subgraphs") {
    Graph c5 = cycle(5);
    auto sub = induced(c5, VertexSet::of(5, {0, 1, 2, 3}));
    CHECK(is_isomorphic(sub.graph, path(4)));
    CHECK(sub.origin == std::vector<int>{0, 1, 2, 3});

    Graph g = Graph(4, {{0, 1}, {1, 2}, {2, 3}});
    CHECK(induced(g, VertexSet::full(4)).graph == g);
    CHECK(induced(complete(4), VertexSet::of(4, {0, 1})).graph == complete(2));
    CHECK_THROWS_AS(induced(g, VertexSet::of(3, {0})), DomainError);
}

TEST_CASE("independent sets and cliques") {
    Graph c4 = cycle(4);
    CHECK(is_independent(c4, VertexSet::of(4, {0, 2})));
    CHECK_FALSE(is_independent(complete(3), VertexSet::of(3, {0, 1})));
    CHECK(is_independent(c4, VertexSet(4)));
    CHECK(is_independent(c4, VertexSet::of(4, {1})));

    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        Graph g = random_graph(rng, 6, 0.5);
        Graph cg = complement(g);
        VertexSet s(6);
        for (int v = 0; v < 6; ++v)
            if (rng() & 1) s.set(v);
        CHECK(is_clique(g, s) == is_independent(cg, s));
    }
}

TEST_CASE("universal vertices") {
    CHECK(universal_vertices(complete_bipartite(1, 3)) == VertexSet::of(4, {0}));
    CHECK(universal_vertices(cycle(5)).empty());
    CHECK(universal_vertices(complete(4)) == VertexSet::full(4));
}

TEST_CASE("false twin classes") {
    auto classes = false_twin_classes(cycle(4));
    REQUIRE(classes.size() == 2);
    CHECK(classes[0] == VertexSet::of(4, {0, 2}));
    CHECK(classes[1] == VertexSet::of(4, {1, 3}));
    CHECK(false_twin_classes(path(4)).size() == 4);
    auto iso3 = false_twin_classes(edgeless(3));
    REQUIRE(iso3.size() == 1);
    CHECK(iso3[0] == VertexSet::full(3));

    // Two distinct vertices in one class are never adjacent.
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 50; ++trial) {
        Graph g = random_graph(rng, 7, 0.4);
        for (const auto& cls : false_twin_classes(g))
            CHECK(is_independent(g, cls));
    }
}

TEST_CASE("compose") {
    CHECK(compose(edgeless(1), edgeless(1), ComposeMode::join) == complete(2));
    CHECK(compose(complete(2), complete(2), ComposeMode::disjoint_union) ==
          Graph(4, {{0, 1}, {2, 3}}));
    Graph k2k1 = compose(complete(2), edgeless(1), ComposeMode::disjoint_union);
    CHECK(is_isomorphic(compose(k2k1, edgeless(1), ComposeMode::join), gk(2)));
}

TEST_CASE("substitute") {
    // Complete split graph: one K2 endpoint blown to a clique, the other to
    // an independent set.
    std::vector<Graph> parts{complete(3), edgeless(2)};
    auto sub = substitute(complete(2), parts);
    CHECK(sub.graph == compose(complete(3), edgeless(2), ComposeMode::join));
    CHECK(sub.offset == std::vector<int>{0, 3});

    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 30; ++trial) {
        Graph g = random_graph(rng, 5, 0.5);
        std::vector<Graph> singletons(5, edgeless(1));
        CHECK(substitute(g, singletons).graph == g);
    }

    // Substituting the universal vertex of G[3] by a clique keeps width 3.
    Graph g3 = gk(3);
    std::vector<Graph> blow(8, edgeless(1));
    blow[0] = complete(2);
    Graph blown = substitute(g3, blow).graph;
    CHECK(exact_cow(blown).width == 3);
}

TEST_CASE("substitute commutes with complement") {
    std::mt19937_64 rng(19);
    for (int trial = 0; trial < 25; ++trial) {
        int n = 2 + static_cast<int>(rng() % 3);
        Graph g = random_graph(rng, n, 0.5);
        std::vector<Graph> parts, co_parts;
        for (int v = 0; v < n; ++v) {
            Graph p = random_graph(rng, static_cast<int>(rng() % 3), 0.5);
            parts.push_back(p);
            co_parts.push_back(complement(p));
        }
        CHECK(complement(substitute(g, parts).graph) ==
              substitute(complement(g), co_parts).graph);
    }
}

TEST_CASE("bipartition") {
    auto b = bipartition(cycle(4));
    REQUIRE(b);
    CHECK(b->x_side == VertexSet::of(4, {0, 2}));
    CHECK(b->y_side == VertexSet::of(4, {1, 3}));
    CHECK_FALSE(bipartition(complete(3)));

    // P4 plus an isolated vertex: the isolated vertex lands on the x side.
    Graph g(5, {{0, 1}, {1, 2}, {2, 3}});
    auto pb = bipartition(g);
    REQUIRE(pb);
    CHECK(pb->x_side.test(4));
    CHECK(valid_bipartition(g, *pb));

    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 60; ++trial) {
        Graph h = random_graph(rng, 7, 0.3);
        if (auto hb = bipartition(h)) CHECK(valid_bipartition(h, *hb));
    }
}

TEST_CASE("bipartite complement") {
    Graph c6 = cycle(6);
    auto b6 = bipartition(c6);
    REQUIRE(b6);
    CHECK(is_isomorphic(bipartite_complement(c6, *b6), Graph(6, {{0, 1}, {2, 3}, {4, 5}})));

    Graph c8 = cycle(8);
    auto b8 = bipartition(c8);
    REQUIRE(b8);
    CHECK(is_isomorphic(bipartite_complement(c8, *b8), c8));

    Graph k23 = complete_bipartite(2, 3);
    auto bk = bipartition(k23);
    REQUIRE(bk);
    CHECK(bipartite_complement(k23, *bk) == edgeless(5));

    // Involution for random bipartite graphs.
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 40; ++trial) {
        Graph g = random_graph(rng, 7, 0.3);
        auto b = bipartition(g);
        if (!b) continue;
        CHECK(bipartite_complement(bipartite_complement(g, *b), *b) == g);
    }

    Bipartition bad{VertexSet::of(6, {0, 1, 2}), VertexSet::of(6, {2, 3, 4, 5})};
    CHECK_THROWS_AS(bipartite_complement(c6, bad), DomainError);
}

TEST_CASE("graph input validation") {
    CHECK_THROWS_AS(Graph(3, {{0, 0}}), DomainError);
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), DomainError);
    CHECK(Graph(0).order() == 0);
}
