#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "vulnkit/graph.hpp"

namespace vulnkit {

/// Exhaustive solvers. Every subset of V(G) is visited in increasing
/// cardinality, then lexicographic order; the first optimum wins.

/// 20, or the value of VULNKIT_ORACLE_LIMIT when set to a valid integer.
std::size_t default_enumeration_limit();

struct OracleOptions {
    std::size_t limit = default_enumeration_limit();
};

struct IntegrityOptimum {
    Weight iota = 0;
    VertexSet witness;
};

struct OrderConnectivityOptimum {
    /// Minimum w(X) with wcc(G - X) <= l.
    Weight kmin = 0;
    VertexSet witness;
};

IntegrityOptimum oracle_wvi(const WeightedGraph& g, const OracleOptions& options = {});

/// Requires l >= 0.
OrderConnectivityOptimum oracle_wcoc(const WeightedGraph& g, Weight l,
                                     const OracleOptions& options = {});

/// Every iota-set, in enumeration order.
std::vector<VertexSet> enumerate_iota_sets(const WeightedGraph& g, const OracleOptions& options = {});

std::size_t oracle_max_clique(const WeightedGraph& g, const OracleOptions& options = {});

/// Is there a K_{k,k} with one side in part_a and the other in part_b?
/// Throws std::invalid_argument if (part_a, part_b) is not a bipartition of g.
bool oracle_balanced_biclique(const WeightedGraph& g, std::span<const Vertex> part_a,
                              std::span<const Vertex> part_b, std::size_t k,
                              const OracleOptions& options = {});

/// Minimum cardinality vertex cover (weights ignored).
std::size_t oracle_vertex_cover(const WeightedGraph& g, const OracleOptions& options = {});

} // namespace vulnkit
