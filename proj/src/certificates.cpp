#include "cowkit/certificates.hpp"

namespace cowkit {

namespace {

// First adjacent pair inside s, if any.
std::optional<std::pair<int, int>> edge_inside(const Graph& g, const VertexSet& s) {
    for (int u : s) {
        VertexSet hit = g.neighbors(u) & s;
        int v = hit.first();
        if (v >= 0) return std::make_pair(std::min(u, v), std::max(u, v));
    }
    return std::nullopt;
}

} // namespace

std::optional<Violation> verify_witness(const Graph& g, const Witness& w) {
    int n = g.order();
    for (int i = 0; i < static_cast<int>(w.sets.size()); ++i) {
        if (w.sets[i].capacity() != n)
            return Violation{Violation::Kind::malformed, i, -1, -1,
                             "set " + std::to_string(i) + " does not match graph size"};
        if (auto e = edge_inside(g, w.sets[i]))
            return Violation{Violation::Kind::set_not_independent, i, e->first, e->second,
                             "set " + std::to_string(i) + " contains edge " +
                                 std::to_string(e->first) + "-" + std::to_string(e->second)};
    }
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (g.adjacent(u, v)) continue;
            bool covered = false;
            for (const auto& s : w.sets)
                if (s.test(u) && s.test(v)) {
                    covered = true;
                    break;
                }
            if (!covered)
                return Violation{Violation::Kind::pair_uncovered, -1, u, v,
                                 "non-adjacent pair " + std::to_string(u) + "," +
                                     std::to_string(v) + " in no set"};
        }
    return std::nullopt;
}

std::optional<Violation> verify_cover(const Graph& g, const CliqueCover& c) {
    int n = g.order();
    for (int i = 0; i < static_cast<int>(c.cliques.size()); ++i) {
        if (c.cliques[i].capacity() != n)
            return Violation{Violation::Kind::malformed, i, -1, -1,
                             "clique " + std::to_string(i) + " does not match graph size"};
        if (!is_clique(g, c.cliques[i]))
            return Violation{Violation::Kind::set_not_clique, i, -1, -1,
                             "set " + std::to_string(i) + " is not a clique"};
    }
    for (auto [u, v] : g.edge_list()) {
        bool covered = false;
        for (const auto& q : c.cliques)
            if (q.test(u) && q.test(v)) {
                covered = true;
                break;
            }
        if (!covered)
            return Violation{Violation::Kind::edge_uncovered, -1, u, v,
                             "edge " + std::to_string(u) + "-" + std::to_string(v) +
                                 " covered by no clique"};
    }
    return std::nullopt;
}

std::optional<Violation> verify_cover(const Graph& g, const BicliqueCover& c) {
    int n = g.order();
    for (int i = 0; i < static_cast<int>(c.bicliques.size()); ++i) {
        const auto& b = c.bicliques[i];
        if (b.x_part.capacity() != n || b.y_part.capacity() != n)
            return Violation{Violation::Kind::malformed, i, -1, -1,
                             "biclique " + std::to_string(i) + " does not match graph size"};
        if (b.x_part.intersects(b.y_part))
            return Violation{Violation::Kind::malformed, i, -1, -1,
                             "biclique " + std::to_string(i) + " has overlapping sides"};
        for (int x : b.x_part)
            for (int y : b.y_part)
                if (!g.adjacent(x, y))
                    return Violation{Violation::Kind::malformed, i, x, y,
                                     "biclique " + std::to_string(i) + " misses edge " +
                                         std::to_string(x) + "-" + std::to_string(y)};
    }
    for (auto [u, v] : g.edge_list()) {
        bool covered = false;
        for (const auto& b : c.bicliques)
            if ((b.x_part.test(u) && b.y_part.test(v)) || (b.x_part.test(v) && b.y_part.test(u))) {
                covered = true;
                break;
            }
        if (!covered)
            return Violation{Violation::Kind::edge_uncovered, -1, u, v,
                             "edge " + std::to_string(u) + "-" + std::to_string(v) +
                                 " covered by no biclique"};
    }
    return std::nullopt;
}

} // namespace cowkit
