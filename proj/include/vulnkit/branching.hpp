#pragma once

#include <cstdint>
#include <optional>

#include "vulnkit/graph.hpp"
#include "vulnkit/kernels.hpp"

namespace vulnkit {

struct SearchStats {
    std::uint64_t nodes_expanded = 0;
    std::uint64_t max_depth = 0;
    bool edge_bound_rejected = false;
};

struct BranchResult {
    bool yes = false;
    /// Deleted set in original ids; meaningful only when yes.
    VertexSet witness;
    SearchStats stats;
};

/// Grows a connected set by depth-first search from the smallest vertex of
/// each component in turn until its weight reaches weight_floor. Returns
/// nullopt iff every component is lighter than weight_floor.
/// Requires positive weights and 1 <= weight_floor <= size_cap.
std::optional<VertexSet> find_heavy_connected_set(const WeightedGraph& g, std::size_t size_cap,
                                                  Weight weight_floor);

/// Bounded search tree for wVI: branch on a connected set of at most p+1
/// vertices and weight at least p+1.
BranchResult solve_wvi_branch(const WeightedGraph& g, Weight p);

/// Bounded search tree for wCOC: branch on a connected set of at most l+1
/// vertices and weight at least l+1.
BranchResult solve_wcoc_branch(const WeightedGraph& g, Weight k, Weight l);

/// ((l+1)^(k+1) - 1) / l, i.e. the node count of a full (l+1)-ary tree of
/// depth k (k+1 when l = 0). Saturates at UINT64_MAX.
std::uint64_t wcoc_search_tree_bound(Weight k, Weight l);

struct PipelineResult {
    bool yes = false;
    VertexSet witness;
    KernelOutcome kernel_outcome = KernelOutcome::reduced;
    std::size_t kernel_size = 0;
    /// Parameter after kernelization (p' or k').
    Weight reduced_parameter = 0;
    SearchStats stats;
};

/// Kernelize, branch on the kernel, lift the witness.
PipelineResult solve_wvi_kernel_branch(const WeightedGraph& g, Weight p);
PipelineResult solve_wcoc_kernel_branch(const WeightedGraph& g, Weight k, Weight l);

} // namespace vulnkit
