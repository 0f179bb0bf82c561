#pragma once

#include <optional>
#include <vector>

#include "cowkit/certificates.hpp"
#include "cowkit/graph.hpp"

namespace cowkit {

enum class KernelStepKind {
    remove_universal,         // R1: drop a universal vertex, width unchanged
    merge_false_twins,        // R2: drop one of two non-adjacent false twins, width unchanged
    twin_universal_decrement, // R2: as above but the kept twin becomes universal; width drops by 1
};

struct KernelStep {
    KernelStepKind kind;
    int kept;    // -1 for remove_universal
    int removed; // vertex index in the input graph
};

// Replayable log of the reduction. parameter_delta counts the
// twin_universal_decrement steps; the width of the input equals the width of
// the kernel plus parameter_delta.
struct KernelTrace {
    std::vector<KernelStep> steps;
    int parameter_delta = 0;
};

struct Kernelization {
    Graph kernel;                     // reindexed 0..m-1
    std::vector<int> kernel_to_input; // kernel vertex -> input vertex
    KernelTrace trace;
};

// Fixpoint of the two reduction rules: first strip a universal vertex, then
// merge non-adjacent false twins (decrementing when the kept twin turns
// universal). The kernel has no universal vertex and no non-adjacent false
// twins; steps are recorded in input indices.
Kernelization kernelize(const Graph& g);

// Parameterized form: k_remaining = k - parameter_delta. A negative
// k_remaining is an immediate NO.
struct ParameterizedKernel {
    Kernelization kernelization;
    int k_remaining;
};
ParameterizedKernel kernelize(const Graph& g, int k);

// Turn a witness for the kernel (given in kernel indices) into a witness for
// the input by replaying the trace backwards: merged twins rejoin every set
// holding their keeper, decrement steps prepend the forced pair set.
Witness lift_witness(const Kernelization& kz, const Witness& kernel_witness, int input_n);

// Prototype graph on all subsets of {1..k}; two subsets are adjacent exactly
// when they are disjoint. Vertex index = bitmask of the subset.
Graph gk(int k, int limit = 10);

// The k sets {M : i in M}, a complete witness for gk(k).
Witness gk_witness(int k);

struct LabelAssignment {
    std::vector<uint32_t> labels; // bitmask over {1..k} per vertex
};

// Greedy family of non-adjacent pairs no two of which fit in one independent
// set; its size is a lower bound on the complete width.
int cow_lower_bound(const Graph& g);

// Does g have complete width at most k? Kernelizes, rejects kernels larger
// than 2^k' (any reduced k'-probe complete graph embeds into G[k']), then
// searches for an induced embedding into G[k'] as a distinct-label
// assignment. On success the lifted witness verifies on g with at most k
// sets.
std::optional<Witness> decide_k(const Graph& g, int k);

} // namespace cowkit
