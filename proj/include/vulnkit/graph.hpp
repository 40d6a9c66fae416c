#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "vulnkit/arith.hpp"

namespace vulnkit {

using Vertex = int;

/// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<Vertex>;

using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph with non-negative integer vertex weights.
///
/// Vertices are the dense ids 0..n-1. The graph is immutable once built;
/// every operation below returns a new value. Construction validates that
/// there are no loops, no repeated edges, no out-of-range endpoints and no
/// negative weights.
class WeightedGraph {
public:
    WeightedGraph() = default;

    /// Edgeless graph with the given weights.
    explicit WeightedGraph(std::vector<Weight> weights);

    WeightedGraph(std::vector<Weight> weights, std::span<const Edge> edges);

    WeightedGraph(std::vector<Weight> weights, std::initializer_list<Edge> edges)
        : WeightedGraph(std::move(weights), std::span<const Edge>(edges.begin(), edges.size())) {}

    /// Unit-weight graph on n vertices.
    static WeightedGraph unit(std::size_t n, std::span<const Edge> edges = {});
    static WeightedGraph unit(std::size_t n, std::initializer_list<Edge> edges) {
        return unit(n, std::span<const Edge>(edges.begin(), edges.size()));
    }

    std::size_t size() const noexcept { return weights_.size(); }
    std::size_t num_edges() const noexcept { return num_edges_; }
    bool empty() const noexcept { return weights_.empty(); }

    Weight weight(Vertex v) const { return weights_.at(check(v)); }
    const std::vector<Weight>& weights() const noexcept { return weights_; }

    /// Sorted neighbour list.
    const std::vector<Vertex>& neighbors(Vertex v) const { return adjacency_.at(check(v)); }
    std::size_t degree(Vertex v) const { return neighbors(v).size(); }
    bool adjacent(Vertex u, Vertex v) const;

    /// All edges as (u, v) with u < v, lexicographically sorted.
    std::vector<Edge> edges() const;

    /// Sum of all vertex weights.
    Weight total_weight() const;

    /// w(N[v]).
    Weight closed_neighborhood_weight(Vertex v) const;

    bool has_unit_weights() const;

    bool operator==(const WeightedGraph& other) const = default;

private:
    std::size_t check(Vertex v) const;

    std::vector<Weight> weights_;
    std::vector<std::vector<Vertex>> adjacency_;
    std::size_t num_edges_ = 0;
};

/// Induced subgraph together with the id map back into its parent.
struct Subgraph {
    WeightedGraph graph;
    /// parent_id[new id] = id in the parent graph.
    std::vector<Vertex> parent_id;

    /// Maps a set of subgraph ids to parent ids (result sorted).
    VertexSet to_parent(std::span<const Vertex> ids) const;
};

/// Throws std::out_of_range on ids outside [0, n).
VertexSet normalize_vertex_set(const WeightedGraph& g, std::span<const Vertex> ids);

Weight weight_of(const WeightedGraph& g, std::span<const Vertex> set);

/// Connected components ordered by their smallest vertex, each sorted.
std::vector<VertexSet> components(const WeightedGraph& g);

/// Weight of a heaviest component, 0 for the empty graph.
Weight wcc(const WeightedGraph& g);

/// G - X.
Subgraph delete_vertices(const WeightedGraph& g, std::span<const Vertex> x);

/// G[keep].
Subgraph induced_subgraph(const WeightedGraph& g, std::span<const Vertex> keep);

bool is_simplicial(const WeightedGraph& g, Vertex v);
bool is_clique(const WeightedGraph& g, std::span<const Vertex> set);
bool is_independent(const WeightedGraph& g, std::span<const Vertex> set);
bool is_complete(const WeightedGraph& g);
WeightedGraph complement(const WeightedGraph& g);
WeightedGraph with_unit_weights(const WeightedGraph& g);

struct SplitPartition {
    VertexSet clique;
    VertexSet independent;

    bool operator==(const SplitPartition&) const = default;
};

bool is_split_partition(const WeightedGraph& g, const SplitPartition& partition);

/// Hammer–Simeone degree-sequence recognition. Returns the partition whose
/// clique side is the m highest-degree vertices (ties by smaller id), or
/// nullopt if g is not split.
std::optional<SplitPartition> split_partition(const WeightedGraph& g);

/// Witness set X together with its recomputed objective values.
struct Certificate {
    VertexSet deleted;
    Weight deleted_weight = 0;
    Weight heaviest_component = 0;

    Weight integrity() const { return checked_add(deleted_weight, heaviest_component); }
};

Certificate make_certificate(const WeightedGraph& g, std::span<const Vertex> x);

struct Verification {
    std::optional<Certificate> certificate;
    /// Empty on success; otherwise names the violated quantity.
    std::string failure;

    explicit operator bool() const noexcept { return certificate.has_value(); }
};

/// Succeeds iff w(X) + wcc(G - X) <= p.
Verification verify_wvi(const WeightedGraph& g, Weight p, std::span<const Vertex> x);

/// Succeeds iff w(X) <= k and wcc(G - X) <= l.
Verification verify_wcoc(const WeightedGraph& g, Weight k, Weight l, std::span<const Vertex> x);

} // namespace vulnkit
