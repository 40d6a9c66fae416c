#include "vulnkit/random_instances.hpp"

#include <algorithm>
#include <numeric>

namespace vulnkit {

namespace {

std::vector<Weight> random_weights(Rng& rng, std::size_t n, Weight lo, Weight hi) {
    std::uniform_int_distribution<Weight> dist(lo, hi);
    std::vector<Weight> weights(n);
    for (auto& w : weights)
        w = dist(rng);
    return weights;
}

} // namespace

WeightedGraph random_graph(Rng& rng, std::size_t n, double edge_probability, Weight max_weight,
                           bool allow_zero) {
    auto weights = random_weights(rng, n, allow_zero ? 0 : 1, max_weight);
    std::bernoulli_distribution coin(edge_probability);
    std::vector<Edge> edges;
    for (Vertex u = 0; static_cast<std::size_t>(u) < n; ++u)
        for (Vertex v = u + 1; static_cast<std::size_t>(v) < n; ++v)
            if (coin(rng))
                edges.emplace_back(u, v);
    return WeightedGraph(std::move(weights), edges);
}

IntervalModel random_interval_model(Rng& rng, std::size_t n, std::int64_t span, std::int64_t max_length) {
    std::uniform_int_distribution<std::int64_t> start(0, std::max<std::int64_t>(span - 1, 0));
    std::uniform_int_distribution<std::int64_t> length(0, max_length);
    std::vector<Interval> intervals(n);
    for (auto& iv : intervals) {
        iv.lo = start(rng);
        iv.hi = iv.lo + length(rng);
    }
    return IntervalModel(std::move(intervals));
}

WeightedGraph random_split_graph(Rng& rng, std::size_t clique_size, std::size_t independent_size,
                                 double edge_probability) {
    const std::size_t n = clique_size + independent_size;
    std::vector<Vertex> label(n);
    std::iota(label.begin(), label.end(), 0);
    std::shuffle(label.begin(), label.end(), rng);
    std::bernoulli_distribution coin(edge_probability);
    std::vector<Edge> edges;
    auto add = [&](std::size_t a, std::size_t b) {
        edges.emplace_back(std::min(label[a], label[b]), std::max(label[a], label[b]));
    };
    for (std::size_t a = 0; a < clique_size; ++a) {
        for (std::size_t b = a + 1; b < clique_size; ++b)
            add(a, b);
        for (std::size_t b = clique_size; b < n; ++b)
            if (coin(rng))
                add(a, b);
    }
    return WeightedGraph::unit(n, edges);
}

WeightedGraph random_complete_graph(Rng& rng, std::size_t n, Weight max_weight) {
    std::vector<Edge> edges;
    for (Vertex u = 0; static_cast<std::size_t>(u) < n; ++u)
        for (Vertex v = u + 1; static_cast<std::size_t>(v) < n; ++v)
            edges.emplace_back(u, v);
    return WeightedGraph(random_weights(rng, n, 1, max_weight), edges);
}

} // namespace vulnkit
