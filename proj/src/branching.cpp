#include "vulnkit/branching.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace vulnkit {

namespace {

/// Depth-first growth of a heavy connected set over the alive vertices.
class HeavySetFinder {
public:
    explicit HeavySetFinder(const WeightedGraph& g) : g_(g), stamp_(g.size(), 0) {}

    std::optional<VertexSet> find(const std::vector<char>& alive, Weight floor) {
        if (++epoch_ == 0) {
            std::fill(stamp_.begin(), stamp_.end(), 0);
            epoch_ = 1;
        }
        const std::size_t n = g_.size();
        for (std::size_t s = 0; s < n; ++s) {
            if (!alive[s] || stamp_[s] == epoch_)
                continue;
            VertexSet grown;
            Weight weight = 0;
            auto visit = [&](Vertex v) {
                stamp_[static_cast<std::size_t>(v)] = epoch_;
                grown.push_back(v);
                weight += g_.weight(v);
                return weight >= floor;
            };
            if (visit(static_cast<Vertex>(s)))
                return finish(std::move(grown));
            stack_.clear();
            stack_.emplace_back(static_cast<Vertex>(s), 0);
            while (!stack_.empty()) {
                auto& [u, next] = stack_.back();
                const auto& nbrs = g_.neighbors(u);
                while (next < nbrs.size() && (!alive[static_cast<std::size_t>(nbrs[next])] ||
                                              stamp_[static_cast<std::size_t>(nbrs[next])] == epoch_))
                    ++next;
                if (next == nbrs.size()) {
                    stack_.pop_back();
                    continue;
                }
                Vertex v = nbrs[next++];
                if (visit(v))
                    return finish(std::move(grown));
                stack_.emplace_back(v, 0);
            }
        }
        return std::nullopt;
    }

private:
    static VertexSet finish(VertexSet set) {
        std::sort(set.begin(), set.end());
        return set;
    }

    const WeightedGraph& g_;
    std::vector<unsigned> stamp_;
    unsigned epoch_ = 0;
    std::vector<std::pair<Vertex, std::size_t>> stack_;
};

enum class Problem { wvi, wcoc };

/// Bounded search tree shared by both problems. For wVI the heavy-set
/// threshold follows the remaining budget; for wCOC it is fixed at l+1.
class SearchTree {
public:
    SearchTree(const WeightedGraph& g, Problem problem, Weight l)
        : g_(g), problem_(problem), l_(l), alive_(g.size(), 1), finder_(g) {}

    bool search(Weight budget, std::uint64_t depth) {
        ++stats_.nodes_expanded;
        stats_.max_depth = std::max(stats_.max_depth, depth);
        const Weight floor = checked_add(problem_ == Problem::wvi ? budget : l_, 1);
        auto heavy = finder_.find(alive_, floor);
        if (!heavy)
            return true;
        for (Vertex v : *heavy) {
            const Weight rest = budget - g_.weight(v);
            if (rest < 0)
                continue;
            alive_[static_cast<std::size_t>(v)] = 0;
            path_.push_back(v);
            if (search(rest, depth + 1))
                return true;
            path_.pop_back();
            alive_[static_cast<std::size_t>(v)] = 1;
        }
        return false;
    }

    const VertexSet& path() const { return path_; }
    SearchStats& stats() { return stats_; }

private:
    const WeightedGraph& g_;
    Problem problem_;
    Weight l_;
    std::vector<char> alive_;
    VertexSet path_;
    SearchStats stats_;
    HeavySetFinder finder_;
};

/// m > (width - 1) * n, without overflow.
bool exceeds_edge_bound(const WeightedGraph& g, Weight width) {
    const __int128 bound = static_cast<__int128>(width - 1) * static_cast<__int128>(g.size());
    return static_cast<__int128>(g.num_edges()) > bound;
}

BranchResult run_search(const WeightedGraph& g, Problem problem, Weight budget, Weight l) {
    BranchResult result;
    if (budget < 0 || l < 0)
        return result;

    VertexSet zero;
    for (Vertex v = 0; static_cast<std::size_t>(v) < g.size(); ++v)
        if (g.weight(v) == 0)
            zero.push_back(v);
    Subgraph cleaned = delete_vertices(g, zero);

    // a yes-instance has treewidth below p (resp. k + l)
    const Weight width = problem == Problem::wvi ? budget : checked_add(budget, l);
    if (exceeds_edge_bound(cleaned.graph, width)) {
        result.stats.edge_bound_rejected = true;
        return result;
    }

    SearchTree tree(cleaned.graph, problem, l);
    result.yes = tree.search(budget, 0);
    result.stats = tree.stats();
    if (result.yes) {
        result.witness = cleaned.to_parent(tree.path());
        result.witness.insert(result.witness.end(), zero.begin(), zero.end());
        std::sort(result.witness.begin(), result.witness.end());
    }
    return result;
}

} // namespace

std::optional<VertexSet> find_heavy_connected_set(const WeightedGraph& g, std::size_t size_cap,
                                                  Weight weight_floor) {
    if (weight_floor < 1 || static_cast<std::size_t>(weight_floor) > size_cap)
        throw std::invalid_argument("weight floor must lie in [1, size cap]");
    for (Weight w : g.weights())
        if (w == 0)
            throw std::invalid_argument("zero-weight vertex present; remove it first");
    std::vector<char> alive(g.size(), 1);
    return HeavySetFinder(g).find(alive, weight_floor);
}

BranchResult solve_wvi_branch(const WeightedGraph& g, Weight p) {
    return run_search(g, Problem::wvi, p, 0);
}

BranchResult solve_wcoc_branch(const WeightedGraph& g, Weight k, Weight l) {
    return run_search(g, Problem::wcoc, k, l);
}

std::uint64_t wcoc_search_tree_bound(Weight k, Weight l) {
    constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
    if (k < 0)
        return 0;
    std::uint64_t total = 0;
    std::uint64_t level = 1;
    const auto factor = static_cast<std::uint64_t>(l) + 1;
    for (Weight depth = 0; depth <= k; ++depth) {
        if (__builtin_add_overflow(total, level, &total))
            return kMax;
        if (depth < k && __builtin_mul_overflow(level, factor, &level))
            return kMax;
    }
    return total;
}

PipelineResult solve_wvi_kernel_branch(const WeightedGraph& g, Weight p) {
    PipelineResult out;
    WviKernel kernel = kernelize_wvi(g, p);
    out.kernel_outcome = kernel.outcome;
    out.reduced_parameter = kernel.p;
    out.kernel_size = kernel.graph.size();
    switch (kernel.outcome) {
    case KernelOutcome::immediate_no:
        return out;
    case KernelOutcome::immediate_yes:
        out.yes = true;
        out.witness = lift_witness(kernel.trace, {});
        return out;
    case KernelOutcome::reduced:
        break;
    }
    BranchResult branch = solve_wvi_branch(kernel.graph, kernel.p);
    out.stats = branch.stats;
    out.yes = branch.yes;
    if (branch.yes)
        out.witness = lift_witness(kernel.trace, branch.witness);
    return out;
}

PipelineResult solve_wcoc_kernel_branch(const WeightedGraph& g, Weight k, Weight l) {
    PipelineResult out;
    WcocKernel kernel = kernelize_wcoc(g, k, l);
    out.kernel_outcome = kernel.outcome;
    out.reduced_parameter = kernel.k;
    out.kernel_size = kernel.graph.size();
    if (kernel.outcome == KernelOutcome::immediate_no)
        return out;
    BranchResult branch = solve_wcoc_branch(kernel.graph, kernel.k, kernel.l);
    out.stats = branch.stats;
    out.yes = branch.yes;
    if (branch.yes)
        out.witness = lift_witness(kernel.trace, branch.witness);
    return out;
}

} // namespace vulnkit
