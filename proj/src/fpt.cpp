#include "cowkit/fpt.hpp"

#include <algorithm>
#include <numeric>

namespace cowkit {

namespace {

bool universal_within(const Graph& g, const VertexSet& alive, int v) {
    return (g.neighbors(v) & alive).count() == alive.count() - 1;
}

} // namespace

Kernelization kernelize(const Graph& g) {
    int n = g.order();
    VertexSet alive = VertexSet::full(n);
    KernelTrace trace;
    bool progress = true;
    while (progress && !alive.empty()) {
        progress = false;
        // Universal vertices go first: the twin rule assumes none are left.
        for (int v : alive)
            if (universal_within(g, alive, v)) {
                trace.steps.push_back({KernelStepKind::remove_universal, -1, v});
                alive.reset(v);
                progress = true;
                break;
            }
        if (progress) continue;
        for (int u : alive) {
            VertexSet nu = g.neighbors(u) & alive;
            for (int v = alive.next(u); v >= 0; v = alive.next(v)) {
                if (g.adjacent(u, v)) continue;
                if (nu != (g.neighbors(v) & alive)) continue;
                // Keep u, remove v. The kept twin is universal in the rest
                // exactly when its alive neighborhood covers everything else.
                if (nu.count() == alive.count() - 2) {
                    trace.steps.push_back({KernelStepKind::twin_universal_decrement, u, v});
                    ++trace.parameter_delta;
                } else {
                    trace.steps.push_back({KernelStepKind::merge_false_twins, u, v});
                }
                alive.reset(v);
                progress = true;
                break;
            }
            if (progress) break;
        }
    }
    auto sub = induced(g, alive);
    return Kernelization{std::move(sub.graph), std::move(sub.origin), std::move(trace)};
}

ParameterizedKernel kernelize(const Graph& g, int k) {
    Kernelization kz = kernelize(g);
    int remaining = k - kz.trace.parameter_delta;
    return ParameterizedKernel{std::move(kz), remaining};
}

Witness lift_witness(const Kernelization& kz, const Witness& kernel_witness, int input_n) {
    Witness w;
    for (const auto& s : kernel_witness.sets) {
        VertexSet mapped(input_n);
        for (int v : s) mapped.set(kz.kernel_to_input[v]);
        w.sets.push_back(std::move(mapped));
    }
    for (auto it = kz.trace.steps.rbegin(); it != kz.trace.steps.rend(); ++it) {
        switch (it->kind) {
        case KernelStepKind::remove_universal:
            break; // universal vertices sit in no non-adjacent pair
        case KernelStepKind::merge_false_twins:
            for (auto& s : w.sets)
                if (s.test(it->kept)) s.set(it->removed);
            break;
        case KernelStepKind::twin_universal_decrement: {
            VertexSet pair(input_n);
            pair.set(it->kept);
            pair.set(it->removed);
            w.sets.insert(w.sets.begin(), std::move(pair));
            break;
        }
        }
    }
    return w;
}

Graph gk(int k, int limit) {
    if (k < 1 || k > limit) throw DomainError("gk: k out of range 1.." + std::to_string(limit));
    int n = 1 << k;
    GraphBuilder b(n);
    for (int m = 0; m < n; ++m)
        for (int l = m + 1; l < n; ++l)
            if ((m & l) == 0) b.add_edge(m, l);
    Graph g = b.build();
    std::vector<std::string> labels(n);
    for (int m = 0; m < n; ++m) {
        std::string s = "{";
        for (int i = 1; i <= k; ++i)
            if (m & (1 << (i - 1))) s += (s.size() > 1 ? "," : "") + std::to_string(i);
        labels[m] = s + "}";
    }
    g.set_labels(std::move(labels));
    return g;
}

Witness gk_witness(int k) {
    if (k < 1) throw DomainError("gk_witness: k must be positive");
    int n = 1 << k;
    Witness w;
    for (int i = 0; i < k; ++i) {
        VertexSet s(n);
        for (int m = 0; m < n; ++m)
            if (m & (1 << i)) s.set(m);
        w.sets.push_back(std::move(s));
    }
    return w;
}

namespace {

// Two non-adjacent pairs conflict when no independent set can hold all their
// vertices; conflicting pairs need distinct witness sets.
bool pairs_conflict(const Graph& g, std::pair<int, int> a, std::pair<int, int> b) {
    int verts[4] = {a.first, a.second, b.first, b.second};
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (verts[i] != verts[j] && g.adjacent(verts[i], verts[j])) return true;
    return false;
}

} // namespace

int cow_lower_bound(const Graph& g) {
    std::vector<std::pair<int, int>> chosen;
    int n = g.order();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (g.adjacent(u, v)) continue;
            bool all = true;
            for (auto& c : chosen)
                if (!pairs_conflict(g, c, {u, v})) {
                    all = false;
                    break;
                }
            if (all) chosen.emplace_back(u, v);
        }
    return static_cast<int>(chosen.size());
}

namespace {

struct LabelSearch {
    const Graph& g;
    int k;
    std::vector<int> order;    // vertices by decreasing degree
    LabelAssignment assignment; // bitmasks over {1..k}, distinct and nonempty

    bool assign(size_t depth, int coords_used) {
        if (depth == order.size()) return true;
        int v = order[depth];
        auto& label = assignment.labels;
        // Coordinates beyond those already in use are interchangeable, so a
        // candidate may add new coordinates only as the next unused prefix.
        for (int fresh = 0; fresh <= k - coords_used; ++fresh) {
            uint32_t fresh_bits = (fresh ? (1u << fresh) - 1 : 0u) << coords_used;
            uint32_t old_limit = 1u << coords_used;
            for (uint32_t old_bits = 0; old_bits < old_limit; ++old_bits) {
                uint32_t cand = old_bits | fresh_bits;
                if (cand == 0) continue;
                bool ok = true;
                for (size_t j = 0; j < depth && ok; ++j) {
                    uint32_t other = label[order[j]];
                    bool disjoint = (cand & other) == 0;
                    ok = cand != other && disjoint == g.adjacent(v, order[j]);
                }
                if (!ok) continue;
                label[v] = cand;
                if (assign(depth + 1, coords_used + fresh)) return true;
            }
        }
        return false;
    }
};

// One independent pair-set per non-adjacent pair; always a valid witness.
Witness all_pairs_witness(const Graph& g) {
    Witness w;
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (!g.adjacent(u, v)) {
                VertexSet s(g.order());
                s.set(u);
                s.set(v);
                w.sets.push_back(std::move(s));
            }
    return w;
}

} // namespace

std::optional<Witness> decide_k(const Graph& g, int k) {
    if (k < 0) return std::nullopt;
    ParameterizedKernel pk = kernelize(g, k);
    Kernelization& kz = pk.kernelization;
    int kr = pk.k_remaining;
    if (kr < 0) return std::nullopt;
    int m = kz.kernel.order();
    if (m == 0) return lift_witness(kz, Witness{}, g.order());
    // Size bound: a reduced graph of width <= kr embeds into G[kr].
    if (kr < 30 && m > (1 << kr)) return std::nullopt;
    if (cow_lower_bound(kz.kernel) > kr) return std::nullopt;
    if (kr == 0) return std::nullopt; // nonempty reduced kernel is not complete
    if (kr > 31) {
        // The labeling search carries coordinates in 32-bit masks. Width
        // never exceeds the number of non-adjacent pairs, which settles any
        // budget this generous; anything between is out of reach.
        Witness pairs = all_pairs_witness(kz.kernel);
        if (static_cast<int>(pairs.sets.size()) <= kr) return lift_witness(kz, pairs, g.order());
        throw LimitError("decision parameter " + std::to_string(k) +
                         " exceeds the labeling search range");
    }

    LabelSearch search{kz.kernel, kr, {}, {}};
    search.order.resize(m);
    std::iota(search.order.begin(), search.order.end(), 0);
    std::stable_sort(search.order.begin(), search.order.end(), [&](int a, int b) {
        return kz.kernel.degree(a) > kz.kernel.degree(b);
    });
    search.assignment.labels.assign(m, 0);
    if (!search.assign(0, 0)) return std::nullopt;

    Witness kernel_witness;
    for (int i = 0; i < kr; ++i) {
        VertexSet s(m);
        for (int v = 0; v < m; ++v)
            if (search.assignment.labels[v] & (1u << i)) s.set(v);
        if (!s.empty()) kernel_witness.sets.push_back(std::move(s));
    }
    return lift_witness(kz, kernel_witness, g.order());
}

} // namespace cowkit
