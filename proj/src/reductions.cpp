#include "cowkit/reductions.hpp"

namespace cowkit {

ReducedInstance biclique_to_cow(const Graph& g, const Bipartition& b, int k) {
    if (!valid_bipartition(g, b)) throw DomainError("invalid bipartition");
    if (k < 0) throw DomainError("negative cover budget");
    int n = g.order();
    int x_apex = n, y_apex = n + 1;
    GraphBuilder gb(n + 2);
    for (int x : b.x_side)
        for (int y : b.y_side)
            if (!g.adjacent(x, y)) gb.add_edge(x, y); // bipartite complement
    for (int y : b.y_side) gb.add_edge(x_apex, y);
    for (int x : b.x_side) gb.add_edge(y_apex, x);
    gb.add_edge(x_apex, y_apex);
    std::vector<int> index_map(n);
    for (int v = 0; v < n; ++v) index_map[v] = v;
    return ReducedInstance{gb.build(), k + 2, x_apex, y_apex, b, std::move(index_map)};
}

Graph source_graph(const ReducedInstance& r) {
    int n = r.g_prime.order() - 2;
    GraphBuilder gb(n);
    for (int x : r.source_bipartition.x_side)
        for (int y : r.source_bipartition.y_side)
            if (!r.g_prime.adjacent(r.index_map[x], r.index_map[y])) gb.add_edge(x, y);
    return gb.build();
}

namespace {

VertexSet side_in_prime(const ReducedInstance& r, const VertexSet& side, int apex) {
    VertexSet s(r.g_prime.order());
    for (int v : side) s.set(r.index_map[v]);
    s.set(apex);
    return s;
}

} // namespace

Witness cover_to_witness(const BicliqueCover& c, const ReducedInstance& r) {
    Graph source = source_graph(r);
    if (auto bad = verify_cover(source, c))
        throw DomainError("biclique cover does not verify on the source: " + bad->message);
    Witness w;
    for (const auto& b : c.bicliques) {
        VertexSet s(r.g_prime.order());
        for (int x : b.x_part) s.set(r.index_map[x]);
        for (int y : b.y_part) s.set(r.index_map[y]);
        w.sets.push_back(std::move(s));
    }
    w.sets.push_back(side_in_prime(r, r.source_bipartition.x_side, r.x_apex));
    w.sets.push_back(side_in_prime(r, r.source_bipartition.y_side, r.y_apex));
    return w;
}

BicliqueCover witness_to_cover(const Witness& w, const ReducedInstance& r) {
    if (auto bad = verify_witness(r.g_prime, w))
        throw DomainError("witness does not verify on the reduced instance: " + bad->message);
    if (w.sets.size() < 2) throw DomainError("witness too small to contain the apex sides");
    if (r.source_bipartition.x_side.empty() || r.source_bipartition.y_side.empty())
        throw DomainError("witness translation needs both sides nonempty");

    VertexSet x_full = side_in_prime(r, r.source_bipartition.x_side, r.x_apex);
    VertexSet y_full = side_in_prime(r, r.source_bipartition.y_side, r.y_apex);
    std::vector<VertexSet> sets = w.sets;

    // The set covering (u, x_apex) for any u in X lies inside X'; pin the
    // apex to that one set (grown to the full side) and strip it elsewhere.
    auto normalize = [&](int anchor, int apex, const VertexSet& full_side) {
        size_t home = sets.size();
        for (size_t i = 0; i < sets.size(); ++i)
            if (sets[i].test(anchor) && sets[i].test(apex)) {
                home = i;
                break;
            }
        if (home == sets.size()) throw DomainError("witness covers no apex pair");
        sets[home] = full_side;
        for (size_t i = 0; i < sets.size(); ++i)
            if (i != home && sets[i].test(apex)) sets[i].reset(apex);
        return home;
    };
    size_t tx = normalize(r.index_map[r.source_bipartition.x_side.first()], r.x_apex, x_full);
    size_t ty = normalize(r.index_map[r.source_bipartition.y_side.first()], r.y_apex, y_full);

    int n = r.g_prime.order() - 2;
    BicliqueCover cover;
    for (size_t i = 0; i < sets.size(); ++i) {
        if (i == tx || i == ty) continue;
        Biclique b{VertexSet(n), VertexSet(n)};
        for (int x : r.source_bipartition.x_side)
            if (sets[i].test(r.index_map[x])) b.x_part.set(x);
        for (int y : r.source_bipartition.y_side)
            if (sets[i].test(r.index_map[y])) b.y_part.set(y);
        cover.bicliques.push_back(std::move(b));
    }
    return cover;
}

} // namespace cowkit
