#pragma once

#include <string>
#include <vector>

#include "vulnkit/graph.hpp"

namespace vulnkit {

enum class KernelRule {
    drop_zero_weight,      ///< weight-0 vertices removed, parameters unchanged
    keep_heaviest,         ///< wVI: only the p+1 heaviest components kept
    drop_light_components, ///< wCOC: components of weight <= l removed
    forced_vertex,         ///< vertex in every solution; budget charged
    solved_directly,       ///< small residual parameter decided by enumeration
    trivial_no,
    size_reject,
};

const char* to_string(KernelRule rule);

/// One applied rule. Vertex ids refer to the graph *before* the step.
struct KernelStep {
    KernelRule rule;
    VertexSet removed;
    /// Budget charged by forced_vertex.
    Weight charged = 0;
    /// id_map[old id] = new id, or -1 if the vertex was removed.
    std::vector<Vertex> id_map;
    /// Witness of the residual instance for solved_directly (ids before the step).
    VertexSet witness;
    std::string detail;
};

struct KernelTrace {
    std::size_t original_size = 0;
    std::vector<KernelStep> steps;
};

enum class KernelOutcome { reduced, immediate_yes, immediate_no };

struct WviKernel {
    KernelOutcome outcome = KernelOutcome::reduced;
    WeightedGraph graph;
    Weight p = 0;
    KernelTrace trace;
};

struct WcocKernel {
    KernelOutcome outcome = KernelOutcome::reduced;
    WeightedGraph graph;
    Weight k = 0;
    Weight l = 0;
    KernelTrace trace;
};

/// Kernel with at most p^3 vertices, each of weight at most p.
WviKernel kernelize_wvi(const WeightedGraph& g, Weight p);

/// Kernel with at most k*l*(k+l)+k vertices, each of weight at most k+l.
WcocKernel kernelize_wcoc(const WeightedGraph& g, Weight k, Weight l);

/// Maps a kernel witness back to the original instance: remaps ids, adds
/// forced vertices and the dropped weight-0 vertices. For a trace ending in
/// solved_directly the recorded witness is used and x_kernel must be empty.
/// Throws std::out_of_range if x_kernel leaves the kernel's vertex set.
VertexSet lift_witness(const KernelTrace& trace, std::span<const Vertex> x_kernel);

/// Re-applies the recorded deletions to the original graph.
WeightedGraph replay(const KernelTrace& trace, const WeightedGraph& original);

} // namespace vulnkit
