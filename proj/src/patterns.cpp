#include "cowkit/patterns.hpp"

#include <algorithm>
#include <numeric>

#include "cowkit/fpt.hpp"

namespace cowkit {

namespace {

Graph named(Graph g, std::vector<std::string> labels) {
    g.set_labels(std::move(labels));
    return g;
}

std::vector<Pattern> build_catalog() {
    const Graph k1 = edgeless(1);
    const Graph i2 = edgeless(2);
    const Graph k2k1 = compose(complete(2), k1, ComposeMode::disjoint_union);
    // Triangle with a pendant vertex at each corner.
    const Graph net = named(Graph(6, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 4}, {2, 5}}),
                            {"a", "b", "c", "a'", "b'", "c'"});
    const Graph gem = compose(path(4), k1, ComposeMode::join);

    std::vector<Pattern> pats;
    pats.push_back({"K2+K1", k2k1});
    pats.push_back({"C4", cycle(4)});
    pats.push_back({"2K2", compose(complete(2), complete(2), ComposeMode::disjoint_union)});
    pats.push_back({"P4", path(4)});
    pats.push_back({"K3+K1", compose(complete(3), k1, ComposeMode::disjoint_union)});
    pats.push_back({"(K2+K1)⋆2K1", compose(k2k1, i2, ComposeMode::join)});
    pats.push_back({"C4⋆2K1", compose(cycle(4), i2, ComposeMode::join)});
    pats.push_back({"F1", pats[2].graph});                      // 2K2
    pats.push_back({"F2", cycle(5)});                           // C5
    pats.push_back({"F3", complement(path(5))});                // house
    pats.push_back({"F4", compose(complete(4), k1, ComposeMode::disjoint_union)});
    // Diamond with a pendant at a tip.
    pats.push_back({"F5", Graph(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3}, {3, 4}})});
    // C4 with pendants at two adjacent vertices.
    pats.push_back({"F6", Graph(6, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {3, 4}, {2, 5}})});
    // K4 with pendants at two vertices.
    pats.push_back({"F7", Graph(6, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 2}, {1, 3}, {3, 4}, {2, 5}})});
    pats.push_back({"F8", compose(gem, k1, ComposeMode::disjoint_union)});
    // Gem plus a vertex adjacent to the two middle path vertices.
    pats.push_back({"F9", Graph(6, {{0, 1}, {1, 2}, {2, 3}, {0, 4}, {1, 4}, {2, 4}, {3, 4}, {1, 5}, {2, 5}})});
    pats.push_back({"F10", compose(path(4), i2, ComposeMode::join)});
    pats.push_back({"F11", compose(compose(complete(3), k1, ComposeMode::disjoint_union), i2, ComposeMode::join)});
    pats.push_back({"F12", compose(k2k1, k2k1, ComposeMode::join)});
    pats.push_back({"F13", compose(k2k1, cycle(4), ComposeMode::join)});
    pats.push_back({"F14", compose(cycle(4), cycle(4), ComposeMode::join)});
    pats.push_back({"Net", net});
    pats.push_back({"C5", cycle(5)});
    pats.push_back({"C8", cycle(8)});
    pats.push_back({"3K2", Graph(6, {{0, 1}, {2, 3}, {4, 5}})});
    pats.push_back({"K3", complete(3)});
    pats.push_back({"P5", path(5)});
    pats.push_back({"G[1]", complete(2)});
    pats.push_back({"G[2]", compose(compose(complete(2), k1, ComposeMode::disjoint_union), k1, ComposeMode::join)});
    pats.push_back({"G[3]", compose(compose(net, k1, ComposeMode::disjoint_union), k1, ComposeMode::join)});
    return pats;
}

} // namespace

const std::vector<Pattern>& catalog() {
    static const std::vector<Pattern> pats = build_catalog();
    return pats;
}

const Pattern& pattern(std::string_view name) {
    for (const auto& p : catalog())
        if (p.name == name) return p;
    throw DomainError("unknown pattern name: " + std::string(name));
}

namespace {

// Static matching order: start from the highest-degree pattern vertex, then
// repeatedly take the vertex with most edges into the chosen prefix.
std::vector<int> match_order(const Graph& pat) {
    int m = pat.order();
    std::vector<int> order;
    std::vector<bool> used(m, false);
    for (int step = 0; step < m; ++step) {
        int best = -1, best_conn = -1, best_deg = -1;
        for (int v = 0; v < m; ++v) {
            if (used[v]) continue;
            int conn = 0;
            for (int q : order) conn += pat.adjacent(v, q) ? 1 : 0;
            int deg = pat.degree(v);
            if (conn > best_conn || (conn == best_conn && deg > best_deg)) {
                best = v;
                best_conn = conn;
                best_deg = deg;
            }
        }
        order.push_back(best);
        used[best] = true;
    }
    return order;
}

bool match_from(const Graph& host, const Graph& pat, const std::vector<int>& order, size_t depth,
                std::vector<int>& image, std::vector<bool>& taken) {
    if (depth == order.size()) return true;
    int p = order[depth];
    int pdeg = pat.degree(p);
    for (int h = 0; h < host.order(); ++h) {
        if (taken[h] || host.degree(h) < pdeg) continue;
        bool ok = true;
        for (size_t j = 0; j < depth && ok; ++j)
            ok = host.adjacent(h, image[order[j]]) == pat.adjacent(p, order[j]);
        if (!ok) continue;
        image[p] = h;
        taken[h] = true;
        if (match_from(host, pat, order, depth + 1, image, taken)) return true;
        taken[h] = false;
    }
    return false;
}

} // namespace

std::optional<std::vector<int>> contains_induced(const Graph& host, const Graph& pat) {
    if (pat.order() > host.order()) return std::nullopt;
    if (pat.order() == 0) return std::vector<int>{};
    std::vector<int> order = match_order(pat);
    std::vector<int> image(pat.order(), -1);
    std::vector<bool> taken(host.order(), false);
    if (match_from(host, pat, order, 0, image, taken)) return image;
    return std::nullopt;
}

bool is_isomorphic(const Graph& a, const Graph& b) {
    return a.order() == b.order() && a.edge_count() == b.edge_count() &&
           contains_induced(a, b).has_value();
}

std::optional<std::pair<Bipartition, ChainOrdering>> chain_ordering(const Graph& g) {
    auto bip = bipartition(g);
    if (!bip) return std::nullopt;
    std::vector<int> order = bip->x_side.to_vector();
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return g.degree(a) < g.degree(b); });
    for (size_t i = 0; i + 1 < order.size(); ++i)
        if (!g.neighbors(order[i]).is_subset_of(g.neighbors(order[i + 1]))) return std::nullopt;
    return std::make_pair(std::move(*bip), ChainOrdering{std::move(order)});
}

std::optional<SplitPartition> split_partition(const Graph& g) {
    int n = g.order();
    std::vector<int> by_degree(n);
    std::iota(by_degree.begin(), by_degree.end(), 0);
    std::stable_sort(by_degree.begin(), by_degree.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });
    // Hammer-Simeone: with degrees d1 >= ... >= dn and m = max{i : d_i >= i-1},
    // the graph is split iff sum_{i<=m} d_i = m(m-1) + sum_{i>m} d_i, and then
    // the first m vertices form a maximum clique.
    int m = 0;
    for (int i = 0; i < n; ++i)
        if (g.degree(by_degree[i]) >= i) m = i + 1;
    long head = 0, tail = 0;
    for (int i = 0; i < n; ++i)
        (i < m ? head : tail) += g.degree(by_degree[i]);
    if (head != static_cast<long>(m) * (m - 1) + tail) return std::nullopt;

    VertexSet q(n), s(n);
    for (int i = 0; i < n; ++i)
        (i < m ? q : s).set(by_degree[i]);
    // Pull any stable vertex adjacent to all of Q across, keeping Q maximum.
    bool moved = true;
    while (moved) {
        moved = false;
        for (int v : s)
            if ((g.neighbors(v) & q).count() == q.count()) {
                s.reset(v);
                q.set(v);
                moved = true;
                break;
            }
    }
    if (!is_clique(g, q) || !is_independent(g, s))
        throw Error("degree-sequence split partition failed internal check");
    return SplitPartition{std::move(q), std::move(s)};
}

std::optional<PseudoSplitPartition> pseudo_split_partition(const Graph& g) {
    if (contains_induced(g, pattern("2K2").graph)) return std::nullopt;
    if (contains_induced(g, pattern("C4").graph)) return std::nullopt;
    auto c5 = contains_induced(g, pattern("C5").graph);
    if (!c5) {
        auto sp = split_partition(g); // (2K2,C4,C5)-free graphs are split
        if (!sp) throw Error("(2K2,C4,C5)-free graph failed split recognition");
        return PseudoSplitPartition{std::move(sp->clique_part), std::move(sp->stable_part), {}};
    }
    int n = g.order();
    VertexSet cset(n);
    for (int v : *c5) cset.set(v);
    // In a (2K2,C4)-free graph every vertex outside an induced C5 is adjacent
    // to all of it or none of it.
    VertexSet q(n), s(n);
    for (int v = 0; v < n; ++v) {
        if (cset.test(v)) continue;
        int hits = (g.neighbors(v) & cset).count();
        if (hits == 5)
            q.set(v);
        else if (hits == 0)
            s.set(v);
        else
            throw Error("C5 attachment is neither complete nor empty");
    }
    if (!is_clique(g, q) || !is_independent(g, s))
        throw Error("pseudo-split partition failed internal check");
    // Canonical cycle order: smallest vertex first, towards its smaller
    // neighbor on the cycle.
    std::vector<int> cyc = *c5;
    int start = 0;
    for (int i = 1; i < 5; ++i)
        if (cyc[i] < cyc[start]) start = i;
    int prev = cyc[(start + 4) % 5], nxt = cyc[(start + 1) % 5];
    std::vector<int> ordered;
    for (int i = 0, at = start, step = (nxt < prev ? 1 : 4); i < 5; ++i, at = (at + step) % 5)
        ordered.push_back(cyc[at]);
    return PseudoSplitPartition{std::move(q), std::move(s), std::move(ordered)};
}

std::string to_string(SmallWidth w) {
    switch (w) {
    case SmallWidth::w0: return "0";
    case SmallWidth::w1: return "1";
    case SmallWidth::w2: return "2";
    case SmallWidth::w3: return "3";
    default: return "more";
    }
}

const std::vector<std::string>& forbidden_names(int k) {
    static const std::vector<std::string> k1 = {"K2+K1", "C4"};
    static const std::vector<std::string> k2 = {"2K2", "P4", "K3+K1", "(K2+K1)⋆2K1",
                                                "C4⋆2K1"};
    static const std::vector<std::string> k3 = {"F1", "F2",  "F3",  "F4",  "F5",  "F6",  "F7",
                                                "F8", "F9", "F10", "F11", "F12", "F13", "F14"};
    switch (k) {
    case 1: return k1;
    case 2: return k2;
    case 3: return k3;
    default: throw DomainError("forbidden lists exist for k in 1..3");
    }
}

std::optional<ForbiddenHit> find_forbidden(const Graph& g, int k) {
    for (const auto& name : forbidden_names(k)) {
        const Pattern& p = pattern(name);
        if (auto emb = contains_induced(g, p.graph)) return ForbiddenHit{name, std::move(*emb)};
    }
    return std::nullopt;
}

SmallWidth small_width_class(const Graph& g, ClassifyMethod method) {
    if (method == ClassifyMethod::forbidden) {
        if (g.edge_count() == static_cast<long>(g.order()) * (g.order() - 1) / 2)
            return SmallWidth::w0;
        for (int k = 1; k <= 3; ++k)
            if (!find_forbidden(g, k)) return static_cast<SmallWidth>(k);
        return SmallWidth::more;
    }
    for (int k = 0; k <= 3; ++k)
        if (decide_k(g, k)) return static_cast<SmallWidth>(k);
    return SmallWidth::more;
}

} // namespace cowkit
