#include "vulnkit/special_classes.hpp"

#include "vulnkit/errors.hpp"
#include "vulnkit/subset_sum.hpp"

namespace vulnkit {

namespace {

void require_complete(const WeightedGraph& g) {
    if (!is_complete(g))
        throw PreconditionError("the graph is not complete");
}

} // namespace

IntegrityValue solve_vi_split(const WeightedGraph& g) {
    if (!g.has_unit_weights())
        throw PreconditionError("the split-graph solver requires unit weights");
    auto partition = split_partition(g);
    if (!partition)
        throw PreconditionError("the graph is not split");
    IntegrityValue best;
    if (g.empty())
        return best;

    const auto& clique = partition->clique;
    const auto c = static_cast<Weight>(clique.size());
    std::vector<char> in_clique(g.size(), 0);
    for (Vertex v : clique)
        in_clique[static_cast<std::size_t>(v)] = 1;

    best.iota = c + (partition->independent.empty() ? 0 : 1);
    best.witness = clique;
    Vertex kept = -1;
    for (Vertex u : clique) {
        Weight outside = 0;
        for (Vertex x : g.neighbors(u))
            outside += in_clique[static_cast<std::size_t>(x)] ? 0 : 1;
        if (c + outside < best.iota) {
            best.iota = c + outside;
            kept = u;
        }
    }
    if (kept >= 0)
        std::erase(best.witness, kept);
    return best;
}

IntegrityValue solve_wvi_complete(const WeightedGraph& g) {
    require_complete(g);
    return {g.total_weight(), {}};
}

CompleteCocResult solve_wcoc_complete(const WeightedGraph& g, Weight k, Weight l) {
    require_complete(g);
    CompleteCocResult result;
    if (k < 0 || l < 0)
        return result;
    const Weight target = g.total_weight() - l;
    if (target > k)
        return result;

    // zero-weight vertices never need deleting
    std::vector<Weight> weights;
    VertexSet ids;
    for (Vertex v = 0; static_cast<std::size_t>(v) < g.size(); ++v)
        if (g.weight(v) > 0) {
            weights.push_back(g.weight(v));
            ids.push_back(v);
        }
    for (std::size_t i : minsup(weights, target))
        result.witness.push_back(ids[i]);
    result.yes = weight_of(g, result.witness) <= k;
    if (!result.yes)
        result.witness.clear();
    return result;
}

} // namespace vulnkit
