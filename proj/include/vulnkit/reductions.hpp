#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "vulnkit/graph.hpp"

namespace vulnkit {

/// Two-sided vertex partition of a bipartite (or co-bipartite) graph.
struct Bipartition {
    VertexSet part_a;
    VertexSet part_b;

    bool operator==(const Bipartition&) const = default;
};

/// Output of a hardness construction, ready to hand to a solver.
struct ReducedInstance {
    WeightedGraph graph;
    /// "p" for integrity targets, "k" and "l" for order connectivity.
    std::map<std::string, Weight> params;
    /// Construction name as accepted by the CLI.
    std::string construction;
    /// Short description of the source instance.
    std::string source;
    /// Extra flags such as "degenerate".
    std::vector<std::string> tags;
    std::optional<SplitPartition> split;
    std::optional<Bipartition> bipartition;

    /// Integrity target or order connectivity problem this instance encodes.
    std::string problem;
};

/// Clique C* on ids 0..n-1 (one per vertex), independent set I* on ids
/// n..n+m-1 (one per edge, in g.edges() order); unit weights.
struct IncidenceSplitGraph {
    WeightedGraph graph;
    SplitPartition partition;
};

IncidenceSplitGraph incidence_split_graph(const WeightedGraph& g);

/// (G*, k, l = n + m - C(k,2) - k), unit weights. Requires 1 <= k < n and C(k,2) <= m.
ReducedInstance reduce_clique_to_coc_split(const WeightedGraph& g, Weight k);

/// G* plus an isolated vertex z of weight n + m - C(k,2) - k, p = n + m - C(k,2).
/// Requires k < n and C(k,2) <= m.
ReducedInstance reduce_clique_to_wvi_split(const WeightedGraph& g, Weight k);

/// G* plus a disjoint clique of n + m - C(k,2) - k unit vertices, p = n + m - C(k,2).
/// Requires 1 <= k <= n and C(k,2) <= m; when the clique size is zero nothing
/// is added and the instance is tagged "degenerate".
ReducedInstance reduce_clique_to_vi_chordal(const WeightedGraph& g, Weight k);

/// Complement of a bipartite graph with p = n - k. Requires k >= 1 and a
/// valid bipartition.
ReducedInstance reduce_bcbs_to_vi_cobipartite(const WeightedGraph& g, const Bipartition& parts, Weight k);

/// K_r weighted by the values, k = l = sum / 2. Requires positive values
/// with an even sum.
ReducedInstance reduce_partition_to_wcoc_complete(const std::vector<Weight>& values);

/// G†: vertex-vertices 0..n-1 (independent), edge-vertices n..n+m-1
/// (pairwise adjacent), incidence edges between them;
/// k = m - C(q,2), l = C(q,2) + q. Requires 1 <= q <= n and C(q,2) <= m.
ReducedInstance reduce_clique_to_coc_ell(const WeightedGraph& g, Weight q);

/// Checks that, for the incidence split graph of g, the three statements
/// "g has a k-clique", "some X ⊆ C* with |X| <= k has |X| + n(G* - X) <=
/// n + m - C(k,2)" and "some X ⊆ C* with |X| <= k has n(G* - X) <=
/// n + m - C(k,2) - k" are all true or all false. n(.) is the largest
/// component order. Requires 1 <= k < n; throws InstanceTooLarge when n
/// exceeds the enumeration limit.
bool check_incidence_lemma(const WeightedGraph& g, Weight k);

} // namespace vulnkit
