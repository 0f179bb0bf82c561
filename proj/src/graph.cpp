#include "cowkit/graph.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace cowkit {

Graph edgeless(int n) { return Graph(n); }

Graph complete(int n) {
    GraphBuilder b(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) b.add_edge(u, v);
    return b.build();
}

Graph path(int n) {
    GraphBuilder b(n);
    for (int v = 0; v + 1 < n; ++v) b.add_edge(v, v + 1);
    return b.build();
}

Graph cycle(int n) {
    if (n < 3) throw DomainError("cycle needs at least 3 vertices");
    GraphBuilder b(n);
    for (int v = 0; v + 1 < n; ++v) b.add_edge(v, v + 1);
    b.add_edge(n - 1, 0);
    return b.build();
}

Graph complete_bipartite(int a, int b) {
    GraphBuilder g(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
    return g.build();
}

VertexSet neighborhood(const Graph& g, int v) {
    g.check_vertex(v);
    return g.neighbors(v);
}

Graph complement(const Graph& g) {
    int n = g.order();
    GraphBuilder b(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.adjacent(u, v)) b.add_edge(u, v);
    Graph out = b.build();
    out.set_labels(g.labels());
    return out;
}

InducedSubgraph induced(const Graph& g, const VertexSet& s) {
    g.check_subset(s);
    std::vector<int> origin = s.to_vector();
    int m = static_cast<int>(origin.size());
    GraphBuilder b(m);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (g.adjacent(origin[i], origin[j])) b.add_edge(i, j);
    Graph out = b.build();
    if (!g.labels().empty()) {
        std::vector<std::string> labels(m);
        for (int i = 0; i < m; ++i) labels[i] = g.labels()[origin[i]];
        out.set_labels(std::move(labels));
    }
    return {std::move(out), std::move(origin)};
}

bool is_independent(const Graph& g, const VertexSet& s) {
    g.check_subset(s);
    for (int v : s)
        if (g.neighbors(v).intersects(s)) return false;
    return true;
}

bool is_clique(const Graph& g, const VertexSet& s) {
    g.check_subset(s);
    int c = s.count();
    for (int v : s)
        if ((g.neighbors(v) & s).count() != c - 1) return false;
    return true;
}

VertexSet universal_vertices(const Graph& g) {
    int n = g.order();
    VertexSet out(n);
    for (int v = 0; v < n; ++v)
        if (g.degree(v) == n - 1) out.set(v);
    return out;
}

std::vector<VertexSet> false_twin_classes(const Graph& g) {
    int n = g.order();
    std::vector<VertexSet> classes;
    std::vector<bool> seen(n, false);
    for (int v = 0; v < n; ++v) {
        if (seen[v]) continue;
        VertexSet cls(n);
        cls.set(v);
        seen[v] = true;
        for (int u = v + 1; u < n; ++u)
            if (!seen[u] && g.neighbors(u) == g.neighbors(v)) {
                cls.set(u);
                seen[u] = true;
            }
        classes.push_back(std::move(cls));
    }
    return classes;
}

Graph compose(const Graph& a, const Graph& b, ComposeMode mode) {
    int na = a.order(), nb = b.order();
    GraphBuilder g(na + nb);
    for (auto [u, v] : a.edge_list()) g.add_edge(u, v);
    for (auto [u, v] : b.edge_list()) g.add_edge(na + u, na + v);
    if (mode == ComposeMode::join)
        for (int u = 0; u < na; ++u)
            for (int v = 0; v < nb; ++v) g.add_edge(u, na + v);
    return g.build();
}

Substitution substitute(const Graph& g, std::span<const Graph> parts) {
    int n = g.order();
    if (static_cast<int>(parts.size()) != n)
        throw DomainError("substitute needs one part per vertex");
    std::vector<int> offset(n + 1, 0);
    for (int v = 0; v < n; ++v) offset[v + 1] = offset[v] + parts[v].order();
    GraphBuilder b(offset[n]);
    for (int v = 0; v < n; ++v)
        for (auto [x, y] : parts[v].edge_list()) b.add_edge(offset[v] + x, offset[v] + y);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (!g.adjacent(u, v)) continue;
            for (int x = 0; x < parts[u].order(); ++x)
                for (int y = 0; y < parts[v].order(); ++y)
                    b.add_edge(offset[u] + x, offset[v] + y);
        }
    offset.pop_back();
    return {b.build(), std::move(offset)};
}

std::optional<Bipartition> bipartition(const Graph& g) {
    int n = g.order();
    std::vector<int> color(n, -1);
    VertexSet xs(n), ys(n);
    for (int root = 0; root < n; ++root) {
        if (color[root] >= 0) continue;
        color[root] = 0; // component roots and isolated vertices go to X
        std::deque<int> queue{root};
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            for (int u : g.neighbors(v)) {
                if (color[u] < 0) {
                    color[u] = 1 - color[v];
                    queue.push_back(u);
                } else if (color[u] == color[v]) {
                    return std::nullopt;
                }
            }
        }
    }
    for (int v = 0; v < n; ++v) (color[v] == 0 ? xs : ys).set(v);
    return Bipartition{std::move(xs), std::move(ys)};
}

bool valid_bipartition(const Graph& g, const Bipartition& b) {
    int n = g.order();
    if (b.x_side.capacity() != n || b.y_side.capacity() != n) return false;
    if (b.x_side.intersects(b.y_side)) return false;
    if ((b.x_side | b.y_side) != VertexSet::full(n)) return false;
    return is_independent(g, b.x_side) && is_independent(g, b.y_side);
}

Graph bipartite_complement(const Graph& g, const Bipartition& b) {
    if (!valid_bipartition(g, b)) throw DomainError("invalid bipartition");
    GraphBuilder out(g.order());
    for (int x : b.x_side)
        for (int y : b.y_side)
            if (!g.adjacent(x, y)) out.add_edge(x, y);
    Graph r = out.build();
    r.set_labels(g.labels());
    return r;
}

} // namespace cowkit
