#pragma once

#include "vulnkit/graph.hpp"

namespace vulnkit {

struct IntegrityValue {
    Weight iota = 0;
    VertexSet witness;
};

/// Vertex integrity of a unit-weight split graph in linear time.
///
/// Every vertex of the independent side is simplicial, so an optimal set can
/// be taken inside the clique side C. Removing all of C costs |C| plus one if
/// any independent vertex exists; removing C minus a single vertex u leaves u
/// together with its independent neighbours, costing |C| + |N(u) ∩ I|.
/// Throws PreconditionError for non-unit weights or a non-split graph.
IntegrityValue solve_vi_split(const WeightedGraph& g);

/// w(V) with the empty witness. Throws PreconditionError if g is not complete.
IntegrityValue solve_wvi_complete(const WeightedGraph& g);

struct CompleteCocResult {
    bool yes = false;
    VertexSet witness;
};

/// G - X is a single clique, so the instance is feasible iff the lightest
/// subset of weight at least w(V) - l weighs at most k.
/// Throws PreconditionError if g is not complete.
CompleteCocResult solve_wcoc_complete(const WeightedGraph& g, Weight k, Weight l);

} // namespace vulnkit
