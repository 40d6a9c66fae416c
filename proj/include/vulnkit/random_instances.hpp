#pragma once

#include <random>

#include "vulnkit/graph.hpp"
#include "vulnkit/interval.hpp"

namespace vulnkit {

/// Seeded instance generators shared by the bench command and the tests.
using Rng = std::mt19937_64;

/// Weights drawn uniformly from 1..max_weight (0..max_weight when
/// allow_zero), each edge present with probability edge_probability.
WeightedGraph random_graph(Rng& rng, std::size_t n, double edge_probability, Weight max_weight,
                           bool allow_zero = false);

/// Integer intervals with starts in [0, span) and lengths in [0, max_length].
IntervalModel random_interval_model(Rng& rng, std::size_t n, std::int64_t span, std::int64_t max_length);

/// Clique of clique_size vertices plus independent_size vertices, each
/// attached to every clique vertex with probability edge_probability.
/// Vertex ids are shuffled so the two sides are interleaved.
WeightedGraph random_split_graph(Rng& rng, std::size_t clique_size, std::size_t independent_size,
                                 double edge_probability);

WeightedGraph random_complete_graph(Rng& rng, std::size_t n, Weight max_weight);

} // namespace vulnkit
