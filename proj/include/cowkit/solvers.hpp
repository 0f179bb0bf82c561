#pragma once

#include <optional>
#include <string>

#include "cowkit/fpt.hpp"
#include "cowkit/oracle.hpp"
#include "cowkit/patterns.hpp"

namespace cowkit {

enum class Method {
    reduced, // the reduction alone emptied the graph
    chain,
    split,
    pseudo_split,
    c5_component,
    fpt,
    oracle,
};

std::string to_string(Method m);

struct SolveResult {
    int width = 0;
    Witness witness;
    Method method = Method::reduced;
    KernelTrace reduction_prefix; // reduction applied before solving
};

struct SolverConfig {
    OracleLimits limits;
    int max_k = 20; // ceiling for the iterated decision procedure
};

// The four polynomial solvers. Each reduces its input first (recording the
// trace), solves on the kernel, and lifts the witness back; a kernel outside
// the solver's class raises ClassificationError.

// Chain graphs: width is |X| when the ordering starts at an isolated vertex,
// else |X|+1, witnessed by the nested sets {v1..vi} + (Y - N(vi)).
SolveResult chain_width(const Graph& g);

// (2K2,K3)-free graphs: either chain, or a C5 component plus isolated
// vertices with width exactly 5.
SolveResult triangle_free_2k2_width(const Graph& g);

// Split graphs without universal vertices have width |Q| or |Q|+1; it is |Q|
// exactly when every non-adjacent stable pair shares some V - N(v), v in Q.
SolveResult split_width(const Graph& g);

// Pseudo-split graphs: |Q|+5 when the C5 part is present, else split.
SolveResult pseudo_split_width(const Graph& g);

// Minimal k accepted by decide_k, as a SolveResult. Empty when the ceiling
// is exceeded.
std::optional<SolveResult> fpt_cow(const Graph& g, const SolverConfig& config = {});

// Reduce, then route to the cheapest applicable solver: chain, triangle-free,
// split, pseudo-split, small-width classification, the iterated decision
// procedure, and finally the exact oracle under its size limit. Empty means
// the instance exceeded every solver domain and limit.
std::optional<SolveResult> dispatch(const Graph& g, const SolverConfig& config = {});

} // namespace cowkit
