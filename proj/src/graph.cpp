#include "vulnkit/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace vulnkit {

WeightedGraph::WeightedGraph(std::vector<Weight> weights)
    : weights_(std::move(weights)), adjacency_(weights_.size()) {
    for (Weight w : weights_)
        if (w < 0)
            throw std::invalid_argument("negative vertex weight " + std::to_string(w));
}

WeightedGraph::WeightedGraph(std::vector<Weight> weights, std::span<const Edge> edges)
    : WeightedGraph(std::move(weights)) {
    const auto n = static_cast<Vertex>(weights_.size());
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::out_of_range("edge endpoint out of range: (" + std::to_string(u) + ", " +
                                    std::to_string(v) + ")");
        if (u == v)
            throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        adjacency_[u].push_back(v);
        adjacency_[v].push_back(u);
    }
    for (auto& nbrs : adjacency_) {
        std::sort(nbrs.begin(), nbrs.end());
        if (std::adjacent_find(nbrs.begin(), nbrs.end()) != nbrs.end())
            throw std::invalid_argument("duplicate edge");
    }
    num_edges_ = edges.size();
}

WeightedGraph WeightedGraph::unit(std::size_t n, std::span<const Edge> edges) {
    return WeightedGraph(std::vector<Weight>(n, 1), edges);
}

std::size_t WeightedGraph::check(Vertex v) const {
    if (v < 0 || static_cast<std::size_t>(v) >= weights_.size())
        throw std::out_of_range("unknown vertex id " + std::to_string(v));
    return static_cast<std::size_t>(v);
}

bool WeightedGraph::adjacent(Vertex u, Vertex v) const {
    const auto& nu = neighbors(u);
    check(v);
    return std::binary_search(nu.begin(), nu.end(), v);
}

std::vector<Edge> WeightedGraph::edges() const {
    std::vector<Edge> out;
    out.reserve(num_edges_);
    for (std::size_t u = 0; u < adjacency_.size(); ++u)
        for (Vertex v : adjacency_[u])
            if (static_cast<Vertex>(u) < v)
                out.emplace_back(static_cast<Vertex>(u), v);
    return out;
}

Weight WeightedGraph::total_weight() const {
    Weight sum = 0;
    for (Weight w : weights_)
        sum = checked_add(sum, w);
    return sum;
}

Weight WeightedGraph::closed_neighborhood_weight(Vertex v) const {
    Weight sum = weight(v);
    for (Vertex u : adjacency_[static_cast<std::size_t>(v)])
        sum = checked_add(sum, weights_[static_cast<std::size_t>(u)]);
    return sum;
}

bool WeightedGraph::has_unit_weights() const {
    return std::all_of(weights_.begin(), weights_.end(), [](Weight w) { return w == 1; });
}

VertexSet Subgraph::to_parent(std::span<const Vertex> ids) const {
    VertexSet out;
    out.reserve(ids.size());
    for (Vertex v : ids)
        out.push_back(parent_id.at(static_cast<std::size_t>(v)));
    std::sort(out.begin(), out.end());
    return out;
}

VertexSet normalize_vertex_set(const WeightedGraph& g, std::span<const Vertex> ids) {
    VertexSet out(ids.begin(), ids.end());
    for (Vertex v : out)
        if (v < 0 || static_cast<std::size_t>(v) >= g.size())
            throw std::out_of_range("unknown vertex id " + std::to_string(v));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Weight weight_of(const WeightedGraph& g, std::span<const Vertex> set) {
    Weight sum = 0;
    for (Vertex v : set)
        sum = checked_add(sum, g.weight(v));
    return sum;
}

std::vector<VertexSet> components(const WeightedGraph& g) {
    const std::size_t n = g.size();
    std::vector<char> seen(n, 0);
    std::vector<VertexSet> out;
    std::vector<Vertex> stack;
    for (std::size_t s = 0; s < n; ++s) {
        if (seen[s])
            continue;
        VertexSet comp;
        seen[s] = 1;
        stack.push_back(static_cast<Vertex>(s));
        while (!stack.empty()) {
            Vertex u = stack.back();
            stack.pop_back();
            comp.push_back(u);
            for (Vertex v : g.neighbors(u))
                if (!seen[static_cast<std::size_t>(v)]) {
                    seen[static_cast<std::size_t>(v)] = 1;
                    stack.push_back(v);
                }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

Weight wcc(const WeightedGraph& g) {
    Weight best = 0;
    for (const auto& comp : components(g))
        best = std::max(best, weight_of(g, comp));
    return best;
}

Subgraph induced_subgraph(const WeightedGraph& g, std::span<const Vertex> keep) {
    VertexSet kept = normalize_vertex_set(g, keep);
    std::vector<Vertex> new_id(g.size(), -1);
    std::vector<Weight> weights;
    weights.reserve(kept.size());
    for (std::size_t i = 0; i < kept.size(); ++i) {
        new_id[static_cast<std::size_t>(kept[i])] = static_cast<Vertex>(i);
        weights.push_back(g.weight(kept[i]));
    }
    std::vector<Edge> edges;
    for (Vertex u : kept)
        for (Vertex v : g.neighbors(u))
            if (u < v && new_id[static_cast<std::size_t>(v)] >= 0)
                edges.emplace_back(new_id[static_cast<std::size_t>(u)],
                                   new_id[static_cast<std::size_t>(v)]);
    return Subgraph{WeightedGraph(std::move(weights), edges), std::move(kept)};
}

Subgraph delete_vertices(const WeightedGraph& g, std::span<const Vertex> x) {
    VertexSet removed = normalize_vertex_set(g, x);
    VertexSet keep;
    keep.reserve(g.size() - removed.size());
    auto it = removed.begin();
    for (Vertex v = 0; static_cast<std::size_t>(v) < g.size(); ++v) {
        if (it != removed.end() && *it == v) {
            ++it;
            continue;
        }
        keep.push_back(v);
    }
    return induced_subgraph(g, keep);
}

bool is_clique(const WeightedGraph& g, std::span<const Vertex> set) {
    for (std::size_t i = 0; i < set.size(); ++i)
        for (std::size_t j = i + 1; j < set.size(); ++j)
            if (set[i] != set[j] && !g.adjacent(set[i], set[j]))
                return false;
    return true;
}

bool is_independent(const WeightedGraph& g, std::span<const Vertex> set) {
    for (std::size_t i = 0; i < set.size(); ++i)
        for (std::size_t j = i + 1; j < set.size(); ++j)
            if (g.adjacent(set[i], set[j]))
                return false;
    return true;
}

bool is_simplicial(const WeightedGraph& g, Vertex v) {
    return is_clique(g, g.neighbors(v));
}

bool is_complete(const WeightedGraph& g) {
    const std::size_t n = g.size();
    return n == 0 || g.num_edges() == n * (n - 1) / 2;
}

WeightedGraph complement(const WeightedGraph& g) {
    std::vector<Edge> edges;
    const auto n = static_cast<Vertex>(g.size());
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (!g.adjacent(u, v))
                edges.emplace_back(u, v);
    return WeightedGraph(g.weights(), edges);
}

WeightedGraph with_unit_weights(const WeightedGraph& g) {
    auto edges = g.edges();
    return WeightedGraph::unit(g.size(), edges);
}

bool is_split_partition(const WeightedGraph& g, const SplitPartition& partition) {
    std::vector<char> side(g.size(), 0);
    for (Vertex v : partition.clique) {
        if (v < 0 || static_cast<std::size_t>(v) >= g.size() || side[static_cast<std::size_t>(v)])
            return false;
        side[static_cast<std::size_t>(v)] = 1;
    }
    for (Vertex v : partition.independent) {
        if (v < 0 || static_cast<std::size_t>(v) >= g.size() || side[static_cast<std::size_t>(v)])
            return false;
        side[static_cast<std::size_t>(v)] = 2;
    }
    if (std::find(side.begin(), side.end(), 0) != side.end())
        return false;
    return is_clique(g, partition.clique) && is_independent(g, partition.independent);
}

std::optional<SplitPartition> split_partition(const WeightedGraph& g) {
    const std::size_t n = g.size();
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });

    // m = max{ i : d_i >= i - 1 } over 1-based positions.
    std::size_t m = 0;
    for (std::size_t i = 1; i <= n; ++i)
        if (g.degree(order[i - 1]) + 1 >= i)
            m = i;

    std::size_t head = 0;
    std::size_t tail = 0;
    for (std::size_t i = 0; i < n; ++i)
        (i < m ? head : tail) += g.degree(order[i]);
    if (head != m * (m == 0 ? 0 : m - 1) + tail)
        return std::nullopt;

    SplitPartition partition;
    partition.clique.assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(m));
    partition.independent.assign(order.begin() + static_cast<std::ptrdiff_t>(m), order.end());
    std::sort(partition.clique.begin(), partition.clique.end());
    std::sort(partition.independent.begin(), partition.independent.end());
    return partition;
}

Certificate make_certificate(const WeightedGraph& g, std::span<const Vertex> x) {
    Certificate cert;
    cert.deleted = normalize_vertex_set(g, x);
    cert.deleted_weight = weight_of(g, cert.deleted);
    cert.heaviest_component = wcc(delete_vertices(g, cert.deleted).graph);
    return cert;
}

Verification verify_wvi(const WeightedGraph& g, Weight p, std::span<const Vertex> x) {
    Certificate cert = make_certificate(g, x);
    if (cert.integrity() > p)
        return {std::nullopt, "w(X) + wcc(G-X) = " + std::to_string(cert.deleted_weight) + " + " +
                                  std::to_string(cert.heaviest_component) + " exceeds p = " +
                                  std::to_string(p)};
    return {std::move(cert), {}};
}

Verification verify_wcoc(const WeightedGraph& g, Weight k, Weight l, std::span<const Vertex> x) {
    Certificate cert = make_certificate(g, x);
    std::string failure;
    if (cert.deleted_weight > k)
        failure = "w(X) = " + std::to_string(cert.deleted_weight) + " exceeds k = " + std::to_string(k);
    if (cert.heaviest_component > l) {
        if (!failure.empty())
            failure += "; ";
        failure += "wcc(G-X) = " + std::to_string(cert.heaviest_component) + " exceeds l = " +
                   std::to_string(l);
    }
    if (!failure.empty())
        return {std::nullopt, failure};
    return {std::move(cert), {}};
}

} // namespace vulnkit
