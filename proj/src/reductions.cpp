#include "vulnkit/reductions.hpp"

#include <algorithm>
#include <numeric>
#include <bit>

#include "vulnkit/errors.hpp"
#include "vulnkit/oracle.hpp"

namespace vulnkit {

namespace {

std::string describe(const WeightedGraph& g) {
    return "graph n=" + std::to_string(g.size()) + " m=" + std::to_string(g.num_edges());
}

VertexSet range(Vertex from, Vertex to) {
    VertexSet out(static_cast<std::size_t>(to - from));
    std::iota(out.begin(), out.end(), from);
    return out;
}

/// Shared preconditions of the two clique-to-integrity constructions.
void require_clique_budget(const WeightedGraph& g, Weight k, Weight max_k) {
    if (k < 1 || k > max_k)
        throw PreconditionError("clique size k=" + std::to_string(k) + " must lie in [1, " +
                                std::to_string(max_k) + "]");
    if (pairs(k) > static_cast<Weight>(g.num_edges()))
        throw PreconditionError("C(k,2) exceeds the number of edges");
}

Weight integrity_target(const WeightedGraph& g, Weight k) {
    return static_cast<Weight>(g.size() + g.num_edges()) - pairs(k);
}

} // namespace

IncidenceSplitGraph incidence_split_graph(const WeightedGraph& g) {
    const auto n = static_cast<Vertex>(g.size());
    const auto graph_edges = g.edges();
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            edges.emplace_back(u, v);
    Vertex e = n;
    for (const auto& [x, y] : graph_edges) {
        edges.emplace_back(x, e);
        edges.emplace_back(y, e);
        ++e;
    }
    IncidenceSplitGraph out;
    out.graph = WeightedGraph::unit(static_cast<std::size_t>(e), edges);
    out.partition.clique = range(0, n);
    out.partition.independent = range(n, e);
    return out;
}

ReducedInstance reduce_clique_to_coc_split(const WeightedGraph& g, Weight k) {
    require_clique_budget(g, k, static_cast<Weight>(g.size()) - 1);
    // Deleting X ⊆ C* with |X| = k leaves one component holding everything except
    // X and the incidence vertices of G[X]; it shrinks to n+m-C(k,2)-k exactly
    // when G[X] is complete. Without the "-k" the bound is met by any k vertices.
    const Weight l = integrity_target(g, k) - k;
    auto star = incidence_split_graph(g);
    ReducedInstance out;
    out.graph = std::move(star.graph);
    out.split = std::move(star.partition);
    out.params = {{"k", k}, {"l", l}};
    out.construction = "clique-coc-split";
    out.problem = "coc";
    out.source = "clique k=" + std::to_string(k) + " in " + describe(g);
    return out;
}

ReducedInstance reduce_clique_to_wvi_split(const WeightedGraph& g, Weight k) {
    require_clique_budget(g, k, static_cast<Weight>(g.size()) - 1);
    auto star = incidence_split_graph(g);
    const Weight p = integrity_target(g, k);
    std::vector<Weight> weights = star.graph.weights();
    weights.push_back(p - k);
    const auto edges = star.graph.edges();
    ReducedInstance out;
    out.graph = WeightedGraph(std::move(weights), edges);
    // z is isolated, so it joins the independent side
    star.partition.independent.push_back(static_cast<Vertex>(star.graph.size()));
    out.split = std::move(star.partition);
    out.params = {{"p", p}};
    out.construction = "clique-wvi-split";
    out.problem = "wvi";
    out.source = "clique k=" + std::to_string(k) + " in " + describe(g);
    return out;
}

ReducedInstance reduce_clique_to_vi_chordal(const WeightedGraph& g, Weight k) {
    require_clique_budget(g, k, static_cast<Weight>(g.size()));
    auto star = incidence_split_graph(g);
    const Weight p = integrity_target(g, k);
    const Weight extra = p - k;
    auto edges = star.graph.edges();
    const auto base = static_cast<Vertex>(star.graph.size());
    const auto total = static_cast<Vertex>(base + extra);
    for (Vertex u = base; u < total; ++u)
        for (Vertex v = u + 1; v < total; ++v)
            edges.emplace_back(u, v);
    ReducedInstance out;
    out.graph = WeightedGraph::unit(static_cast<std::size_t>(total), edges);
    out.params = {{"p", p}};
    out.construction = "clique-vi-chordal";
    out.problem = "vi";
    out.source = "clique k=" + std::to_string(k) + " in " + describe(g);
    if (extra == 0)
        out.tags.push_back("degenerate");
    return out;
}

ReducedInstance reduce_bcbs_to_vi_cobipartite(const WeightedGraph& g, const Bipartition& parts, Weight k) {
    if (k < 1)
        throw PreconditionError("biclique size k must be at least 1");
    VertexSet a = normalize_vertex_set(g, parts.part_a);
    VertexSet b = normalize_vertex_set(g, parts.part_b);
    VertexSet both;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(both));
    if (both.size() != g.size() || a.size() + b.size() != g.size())
        throw PreconditionError("the two parts do not partition the vertex set");
    if (!is_independent(g, a) || !is_independent(g, b))
        throw PreconditionError("the parts are not independent sets");
    ReducedInstance out;
    out.graph = with_unit_weights(complement(g));
    out.bipartition = Bipartition{std::move(a), std::move(b)};
    out.params = {{"p", static_cast<Weight>(g.size()) - k}};
    out.construction = "bcbs-cobipartite";
    out.problem = "vi";
    out.source = "balanced biclique k=" + std::to_string(k) + " in " + describe(g);
    return out;
}

ReducedInstance reduce_partition_to_wcoc_complete(const std::vector<Weight>& values) {
    Weight sum = 0;
    for (Weight a : values) {
        if (a <= 0)
            throw PreconditionError("partition values must be positive");
        sum = checked_add(sum, a);
    }
    if (sum % 2 != 0)
        throw PreconditionError("partition values have an odd sum");
    const auto n = static_cast<Vertex>(values.size());
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            edges.emplace_back(u, v);
    ReducedInstance out;
    out.graph = WeightedGraph(values, edges);
    out.params = {{"k", sum / 2}, {"l", sum / 2}};
    out.construction = "partition-complete";
    out.problem = "wcoc";
    out.source = "partition of " + std::to_string(values.size()) + " values, sum " + std::to_string(sum);
    return out;
}

ReducedInstance reduce_clique_to_coc_ell(const WeightedGraph& g, Weight q) {
    const auto n = static_cast<Vertex>(g.size());
    const auto m = static_cast<Weight>(g.num_edges());
    if (q < 1 || q > n)
        throw PreconditionError("clique size q must lie in [1, n]");
    if (pairs(q) > m)
        throw PreconditionError("C(q,2) exceeds the number of edges");
    const auto graph_edges = g.edges();
    const auto total = static_cast<Vertex>(n + m);
    std::vector<Edge> edges;
    for (Vertex e = n; e < total; ++e) {
        const auto& [x, y] = graph_edges[static_cast<std::size_t>(e - n)];
        edges.emplace_back(x, e);
        edges.emplace_back(y, e);
        for (Vertex f = e + 1; f < total; ++f)
            edges.emplace_back(e, f);
    }
    ReducedInstance out;
    out.graph = WeightedGraph::unit(static_cast<std::size_t>(total), edges);
    out.params = {{"k", m - pairs(q)}, {"l", pairs(q) + q}};
    out.construction = "clique-coc-ell";
    out.problem = "coc";
    out.source = "clique q=" + std::to_string(q) + " in " + describe(g);
    return out;
}

bool check_incidence_lemma(const WeightedGraph& g, Weight k) {
    const std::size_t n = g.size();
    if (k < 1 || k >= static_cast<Weight>(n))
        throw PreconditionError("the lemma needs 1 <= k < n");
    const std::size_t limit = default_enumeration_limit();
    if (n > limit)
        throw InstanceTooLarge(n, limit);

    const bool has_clique = oracle_max_clique(g) >= static_cast<std::size_t>(k);
    const auto star = incidence_split_graph(g).graph;
    const Weight target = integrity_target(g, k);
    bool second = false;
    bool third = false;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        const auto size = static_cast<Weight>(std::popcount(mask));
        if (size > k)
            continue;
        VertexSet x;
        for (std::size_t v = 0; v < n; ++v)
            if (mask >> v & 1)
                x.push_back(static_cast<Vertex>(v));
        const Weight order = wcc(delete_vertices(star, x).graph);
        second = second || size + order <= target;
        third = third || order <= target - k;
    }
    return has_clique == second && second == third;
}

} // namespace vulnkit
