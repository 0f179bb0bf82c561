#include "cowkit/oracle.hpp"

#include <algorithm>

namespace cowkit {

namespace {

void bron_kerbosch(const Graph& g, VertexSet& r, VertexSet p, VertexSet x,
                   std::vector<VertexSet>& out) {
    if (p.empty() && x.empty()) {
        out.push_back(r);
        return;
    }
    // Pivot on the vertex of P|X with most neighbors in P.
    int pivot = -1, best = -1;
    for (int u : (p | x)) {
        int c = (g.neighbors(u) & p).count();
        if (c > best) {
            best = c;
            pivot = u;
        }
    }
    for (int v : (p - g.neighbors(pivot))) {
        r.set(v);
        bron_kerbosch(g, r, p & g.neighbors(v), x & g.neighbors(v), out);
        r.reset(v);
        p.reset(v);
        x.set(v);
    }
}

} // namespace

std::vector<VertexSet> maximal_cliques(const Graph& g) {
    int n = g.order();
    std::vector<VertexSet> out;
    if (n == 0) {
        out.push_back(VertexSet(0));
        return out;
    }
    VertexSet r(n);
    bron_kerbosch(g, r, VertexSet::full(n), VertexSet(n), out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<VertexSet> maximal_independent_sets(const Graph& g) {
    return maximal_cliques(complement(g));
}

namespace {

// Depth-limited minimum cover: targets are pairs or edges, candidates carry
// per-target coverage masks. Branches on the first uncovered target through
// the candidates containing it, in candidate order; iterative deepening
// keeps the first solution minimal and reproducible.
struct CoverSearch {
    int num_targets;
    std::vector<Bitset> covers;                 // candidate -> target mask
    std::vector<std::vector<int>> containing;   // target -> candidate indices
    std::vector<int> chosen;

    bool dfs(const Bitset& covered, int depth_left) {
        if (covered.count() == num_targets) return true;
        if (depth_left == 0) return false;
        int t = first_uncovered(covered);
        for (int idx : containing[t]) {
            chosen.push_back(idx);
            if (dfs(covered | covers[idx], depth_left - 1)) return true;
            chosen.pop_back();
        }
        return false;
    }

    int first_uncovered(const Bitset& covered) const {
        for (int t = 0; t < num_targets; ++t)
            if (!covered.test(t)) return t;
        return -1;
    }

    std::vector<int> run() {
        for (int t = 0; t < num_targets; ++t)
            if (containing[t].empty())
                throw Error("cover target " + std::to_string(t) + " has no candidate set");
        for (int k = 0;; ++k) {
            chosen.clear();
            if (dfs(Bitset(num_targets), k)) return chosen;
        }
    }
};

void check_vertex_limit(const Graph& g, const OracleLimits& limits) {
    if (g.order() > limits.max_vertices)
        throw LimitError("graph has " + std::to_string(g.order()) +
                         " vertices, above the exact-solver limit of " +
                         std::to_string(limits.max_vertices));
}

} // namespace

CowResult exact_cow(const Graph& g, const OracleLimits& limits) {
    check_vertex_limit(g, limits);
    int n = g.order();
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.adjacent(u, v)) pairs.emplace_back(u, v);
    if (pairs.empty()) return {0, {}};

    std::vector<VertexSet> sets = maximal_independent_sets(g);
    CoverSearch search;
    search.num_targets = static_cast<int>(pairs.size());
    search.containing.resize(pairs.size());
    for (int i = 0; i < static_cast<int>(sets.size()); ++i) {
        Bitset mask(search.num_targets);
        for (int t = 0; t < search.num_targets; ++t)
            if (sets[i].test(pairs[t].first) && sets[i].test(pairs[t].second)) {
                mask.set(t);
                search.containing[t].push_back(i);
            }
        search.covers.push_back(std::move(mask));
    }
    std::vector<int> picked = search.run();
    Witness w;
    for (int idx : picked) w.sets.push_back(sets[idx]);
    return {static_cast<int>(picked.size()), std::move(w)};
}

EccResult exact_ecc(const Graph& g, const OracleLimits& limits) {
    CowResult r = exact_cow(complement(g), limits);
    CliqueCover cover;
    cover.cliques = std::move(r.witness.sets); // independent in the complement = clique here
    return {r.width, std::move(cover)};
}

EccResult exact_ecc_direct(const Graph& g, const OracleLimits& limits) {
    check_vertex_limit(g, limits);
    auto edges = g.edge_list();
    if (edges.empty()) return {0, {}};

    std::vector<VertexSet> cliques = maximal_cliques(g);
    CoverSearch search;
    search.num_targets = static_cast<int>(edges.size());
    search.containing.resize(edges.size());
    for (int i = 0; i < static_cast<int>(cliques.size()); ++i) {
        Bitset mask(search.num_targets);
        for (int t = 0; t < search.num_targets; ++t)
            if (cliques[i].test(edges[t].first) && cliques[i].test(edges[t].second)) {
                mask.set(t);
                search.containing[t].push_back(i);
            }
        search.covers.push_back(std::move(mask));
    }
    std::vector<int> picked = search.run();
    CliqueCover cover;
    for (int idx : picked) cover.cliques.push_back(cliques[idx]);
    return {static_cast<int>(picked.size()), std::move(cover)};
}

BicliqueResult exact_biclique_cover(const Graph& g, const Bipartition& b,
                                    const OracleLimits& limits) {
    if (!valid_bipartition(g, b)) throw DomainError("invalid bipartition");
    auto edges = g.edge_list();
    if (static_cast<int>(edges.size()) > limits.max_biclique_edges)
        throw LimitError("graph has " + std::to_string(edges.size()) +
                         " edges, above the biclique-cover limit of " +
                         std::to_string(limits.max_biclique_edges));
    if (edges.empty()) return {0, {}};

    // Maximal bicliques are exactly the maximal cliques after making both
    // sides complete.
    int n = g.order();
    GraphBuilder aux(n);
    for (auto [u, v] : edges) aux.add_edge(u, v);
    auto fill_side = [&](const VertexSet& side) {
        for (int u : side)
            for (int v = side.next(u); v >= 0; v = side.next(v)) aux.add_edge(u, v);
    };
    fill_side(b.x_side);
    fill_side(b.y_side);
    std::vector<Biclique> bicliques;
    for (const auto& c : maximal_cliques(aux.build())) {
        Biclique bc{c & b.x_side, c & b.y_side};
        if (!bc.x_part.empty() && !bc.y_part.empty()) bicliques.push_back(std::move(bc));
    }

    CoverSearch search;
    search.num_targets = static_cast<int>(edges.size());
    search.containing.resize(edges.size());
    for (int i = 0; i < static_cast<int>(bicliques.size()); ++i) {
        Bitset mask(search.num_targets);
        for (int t = 0; t < search.num_targets; ++t) {
            auto [u, v] = edges[t];
            bool covers = (bicliques[i].x_part.test(u) && bicliques[i].y_part.test(v)) ||
                          (bicliques[i].x_part.test(v) && bicliques[i].y_part.test(u));
            if (covers) {
                mask.set(t);
                search.containing[t].push_back(i);
            }
        }
        search.covers.push_back(std::move(mask));
    }
    std::vector<int> picked = search.run();
    BicliqueCover cover;
    for (int idx : picked) cover.bicliques.push_back(bicliques[idx]);
    return {static_cast<int>(picked.size()), std::move(cover)};
}

CowResult exact_cow_unrestricted(const Graph& g) {
    int n = g.order();
    if (n > 6) throw LimitError("unrestricted cover search accepts at most 6 vertices");
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.adjacent(u, v)) pairs.emplace_back(u, v);
    if (pairs.empty()) return {0, {}};

    std::vector<VertexSet> sets;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        VertexSet s(n);
        for (int v = 0; v < n; ++v)
            if (mask & (1u << v)) s.set(v);
        if (is_independent(g, s)) sets.push_back(std::move(s));
    }
    CoverSearch search;
    search.num_targets = static_cast<int>(pairs.size());
    search.containing.resize(pairs.size());
    for (int i = 0; i < static_cast<int>(sets.size()); ++i) {
        Bitset mask(search.num_targets);
        for (int t = 0; t < search.num_targets; ++t)
            if (sets[i].test(pairs[t].first) && sets[i].test(pairs[t].second)) {
                mask.set(t);
                search.containing[t].push_back(i);
            }
        search.covers.push_back(std::move(mask));
    }
    std::vector<int> picked = search.run();
    Witness w;
    for (int idx : picked) w.sets.push_back(sets[idx]);
    return {static_cast<int>(picked.size()), std::move(w)};
}

} // namespace cowkit
