#include "cowkit/solvers.hpp"

#include <algorithm>

namespace cowkit {

std::string to_string(Method m) {
    switch (m) {
    case Method::reduced: return "reduced";
    case Method::chain: return "chain";
    case Method::split: return "split";
    case Method::pseudo_split: return "pseudo_split";
    case Method::c5_component: return "c5_component";
    case Method::fpt: return "fpt";
    case Method::oracle: return "oracle";
    }
    return "?";
}

namespace {

// Witness for the reduced kernel, in kernel indices.
struct KernelSolve {
    int width = 0;
    std::vector<VertexSet> sets;
    Method method = Method::reduced;
};

SolveResult finish(const Graph& input, const Kernelization& kz, KernelSolve solve) {
    Witness lifted = lift_witness(kz, Witness{std::move(solve.sets)}, input.order());
    return SolveResult{solve.width + kz.trace.parameter_delta, std::move(lifted), solve.method,
                       kz.trace};
}

// Nested-set construction on a reduced chain kernel.
KernelSolve solve_chain_kernel(const Graph& k, const Bipartition& b, const ChainOrdering& co) {
    const auto& order = co.order;
    KernelSolve out;
    out.method = Method::chain;
    for (size_t i = 0; i < order.size(); ++i) {
        VertexSet s = b.y_side - k.neighbors(order[i]);
        for (size_t j = 0; j <= i; ++j) s.set(order[j]);
        out.sets.push_back(std::move(s));
    }
    bool first_isolated = !order.empty() && k.degree(order.front()) == 0;
    if (!first_isolated) out.sets.push_back(b.y_side);
    out.width = static_cast<int>(out.sets.size());
    return out;
}

KernelSolve solve_split_kernel(const Graph& k, const SplitPartition& sp) {
    KernelSolve out;
    out.method = Method::split;
    // N_v = V - N(v) restricted to {v} + (S - N(v)); each holds exactly one
    // clique vertex.
    for (int v : sp.clique_part) {
        VertexSet s = sp.stable_part - k.neighbors(v);
        s.set(v);
        out.sets.push_back(std::move(s));
    }
    // Width is |Q| iff every non-adjacent stable pair lands in some N_v.
    bool all_covered = true;
    for (int x : sp.stable_part) {
        for (int y = sp.stable_part.next(x); y >= 0 && all_covered; y = sp.stable_part.next(y)) {
            bool covered = false;
            for (int v : sp.clique_part)
                if (!k.adjacent(v, x) && !k.adjacent(v, y)) {
                    covered = true;
                    break;
                }
            all_covered = covered;
        }
        if (!all_covered) break;
    }
    if (!all_covered) out.sets.push_back(sp.stable_part);
    out.width = static_cast<int>(out.sets.size());
    return out;
}

KernelSolve solve_pseudo_split_kernel(const Graph& k, const PseudoSplitPartition& pp) {
    if (pp.cycle.empty())
        return solve_split_kernel(k, SplitPartition{pp.clique_part, pp.stable_part});
    KernelSolve out;
    out.method = Method::pseudo_split;
    for (int v : pp.clique_part) {
        VertexSet s = pp.stable_part - k.neighbors(v);
        s.set(v);
        out.sets.push_back(std::move(s));
    }
    for (int i = 0; i < 5; ++i) {
        VertexSet s = pp.stable_part;
        s.set(pp.cycle[i]);
        s.set(pp.cycle[(i + 2) % 5]);
        out.sets.push_back(std::move(s));
    }
    out.width = static_cast<int>(out.sets.size());
    return out;
}

// C5 component plus isolated vertices; the isolated
// set rides along in all five sets.
KernelSolve solve_c5_kernel(const Graph& k, const std::vector<int>& cyc) {
    KernelSolve out;
    out.method = Method::c5_component;
    VertexSet isolated(k.order());
    VertexSet on_cycle(k.order());
    for (int v : cyc) on_cycle.set(v);
    for (int v = 0; v < k.order(); ++v)
        if (!on_cycle.test(v)) {
            if (k.degree(v) != 0) throw ClassificationError("unexpected vertex attached to the C5");
            isolated.set(v);
        }
    for (int i = 0; i < 5; ++i) {
        VertexSet s = isolated;
        s.set(cyc[i]);
        s.set(cyc[(i + 2) % 5]);
        out.sets.push_back(std::move(s));
    }
    out.width = 5;
    return out;
}

} // namespace

SolveResult chain_width(const Graph& g) {
    if (!chain_ordering(g)) throw ClassificationError("not a chain graph");
    Kernelization kz = kernelize(g);
    if (kz.kernel.order() == 0) return finish(g, kz, {});
    auto co = chain_ordering(kz.kernel); // chain graphs are hereditary
    if (!co) throw Error("kernel of a chain graph failed chain recognition");
    return finish(g, kz, solve_chain_kernel(kz.kernel, co->first, co->second));
}

SolveResult triangle_free_2k2_width(const Graph& g) {
    if (contains_induced(g, pattern("K3").graph))
        throw ClassificationError("graph contains a triangle");
    if (contains_induced(g, pattern("2K2").graph))
        throw ClassificationError("graph contains an induced 2K2");
    Kernelization kz = kernelize(g);
    if (kz.kernel.order() == 0) return finish(g, kz, {});
    auto c5 = contains_induced(kz.kernel, pattern("C5").graph);
    if (!c5) {
        auto co = chain_ordering(kz.kernel); // (2K2,K3,C5)-free graphs are chain
        if (!co) throw Error("triangle-free 2K2-free C5-free kernel failed chain recognition");
        return finish(g, kz, solve_chain_kernel(kz.kernel, co->first, co->second));
    }
    return finish(g, kz, solve_c5_kernel(kz.kernel, *c5));
}

SolveResult split_width(const Graph& g) {
    if (!split_partition(g)) throw ClassificationError("not a split graph");
    Kernelization kz = kernelize(g);
    if (kz.kernel.order() == 0) return finish(g, kz, {});
    auto sp = split_partition(kz.kernel); // split graphs are hereditary
    if (!sp) throw Error("kernel of a split graph failed split recognition");
    return finish(g, kz, solve_split_kernel(kz.kernel, *sp));
}

SolveResult pseudo_split_width(const Graph& g) {
    if (!pseudo_split_partition(g)) throw ClassificationError("not a pseudo-split graph");
    Kernelization kz = kernelize(g);
    if (kz.kernel.order() == 0) return finish(g, kz, {});
    auto pp = pseudo_split_partition(kz.kernel);
    if (!pp) throw Error("kernel of a pseudo-split graph failed recognition");
    return finish(g, kz, solve_pseudo_split_kernel(kz.kernel, *pp));
}

namespace {

std::optional<KernelSolve> fpt_on_kernel(const Graph& kernel, const SolverConfig& config) {
    for (int k = cow_lower_bound(kernel); k <= config.max_k; ++k) {
        if (auto w = decide_k(kernel, k)) {
            KernelSolve sol;
            sol.width = static_cast<int>(w->sets.size());
            sol.sets = std::move(w->sets);
            sol.method = Method::fpt;
            return sol;
        }
    }
    return std::nullopt;
}

} // namespace

std::optional<SolveResult> fpt_cow(const Graph& g, const SolverConfig& config) {
    Kernelization kz = kernelize(g);
    if (kz.kernel.order() == 0) return finish(g, kz, {});
    auto sol = fpt_on_kernel(kz.kernel, config);
    if (!sol) return std::nullopt;
    SolveResult r = finish(g, kz, std::move(*sol));
    r.method = Method::fpt;
    return r;
}

std::optional<SolveResult> dispatch(const Graph& g, const SolverConfig& config) {
    Kernelization kz = kernelize(g);
    const Graph& kernel = kz.kernel;
    if (kernel.order() == 0) return finish(g, kz, {});

    if (auto co = chain_ordering(kernel))
        return finish(g, kz, solve_chain_kernel(kernel, co->first, co->second));

    if (!contains_induced(kernel, pattern("K3").graph) &&
        !contains_induced(kernel, pattern("2K2").graph)) {
        // Triangle-free and 2K2-free but not chain, so a C5 component exists.
        auto c5 = contains_induced(kernel, pattern("C5").graph);
        if (!c5) throw Error("(2K2,K3)-free non-chain kernel has no C5");
        return finish(g, kz, solve_c5_kernel(kernel, *c5));
    }

    if (auto sp = split_partition(kernel)) return finish(g, kz, solve_split_kernel(kernel, *sp));

    if (auto pp = pseudo_split_partition(kernel))
        return finish(g, kz, solve_pseudo_split_kernel(kernel, *pp));

    // A reduced graph of width <= 3 has at most 2^3 vertices.
    if (kernel.order() <= 8) {
        SmallWidth cls = small_width_class(kernel, ClassifyMethod::forbidden);
        if (cls != SmallWidth::more) {
            auto w = decide_k(kernel, static_cast<int>(cls));
            if (!w) throw Error("small-width classification disagrees with the decision search");
            KernelSolve sol;
            sol.width = static_cast<int>(w->sets.size());
            sol.sets = std::move(w->sets);
            sol.method = Method::fpt;
            return finish(g, kz, std::move(sol));
        }
    }

    try {
        if (auto sol = fpt_on_kernel(kernel, config)) return finish(g, kz, std::move(*sol));
    } catch (const LimitError&) {
        // fall through to the oracle
    }

    if (kernel.order() <= config.limits.max_vertices) {
        CowResult r = exact_cow(kernel, config.limits);
        KernelSolve sol;
        sol.width = r.width;
        sol.sets = std::move(r.witness.sets);
        sol.method = Method::oracle;
        return finish(g, kz, std::move(sol));
    }
    return std::nullopt;
}

} // namespace cowkit
