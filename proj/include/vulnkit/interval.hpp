#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "vulnkit/graph.hpp"
#include "vulnkit/subset_sum.hpp"

namespace vulnkit {

struct Interval {
    std::int64_t lo = 0;
    std::int64_t hi = 0;

    bool operator==(const Interval&) const = default;
};

/// One closed interval per vertex.
class IntervalModel {
public:
    IntervalModel() = default;
    /// Throws std::invalid_argument if some lo > hi.
    explicit IntervalModel(std::vector<Interval> intervals);

    std::size_t size() const noexcept { return intervals_.size(); }
    const Interval& operator[](Vertex v) const { return intervals_.at(static_cast<std::size_t>(v)); }
    const std::vector<Interval>& intervals() const noexcept { return intervals_; }

    /// Intervals of the given vertices, renumbered in the given order.
    IntervalModel restrict_to(std::span<const Vertex> keep) const;

    bool operator==(const IntervalModel&) const = default;

private:
    std::vector<Interval> intervals_;
};

/// Edges of the intersection graph, (u < v), sorted.
std::vector<Edge> intersection_edges(const IntervalModel& model);

WeightedGraph intersection_graph(const IntervalModel& model, std::vector<Weight> weights);

/// Throws PreconditionError naming the first pair on which the model and the
/// graph disagree.
void check_model(const IntervalModel& model, const WeightedGraph& g);

/// Maximal cliques K_1..K_t in path order, padded with empty K_0 and K_{t+1}.
struct CliquePath {
    /// cliques[0] and cliques[t+1] are empty.
    std::vector<VertexSet> cliques;
    /// separators[i] = K_i ∩ K_{i+1} for i = 0..t.
    std::vector<VertexSet> separators;
    /// Index range [first, last] (within 1..t) of the cliques containing each vertex.
    std::vector<std::size_t> first;
    std::vector<std::size_t> last;

    std::size_t t() const noexcept { return cliques.size() - 2; }
};

/// Sweeps the endpoints left to right (starts before ends at equal
/// coordinates) and emits the active set whenever a departure follows an
/// arrival. Checks the model against g first.
CliquePath build_clique_path(const IntervalModel& model, const WeightedGraph& g);

/// V_{i,j}: vertices of K_{i+1} ∪ ... ∪ K_j outside S_i ∪ S_j, i.e. those whose
/// whole clique range lies in [i+1, j]. Requires 0 <= i < j <= t.
VertexSet between_set(const CliquePath& path, std::size_t i, std::size_t j);

/// How Y_{i,j} is obtained: the lightest subset of V_{i,j} reaching
/// w(V_{i,j}) - l, or the complement of the heaviest subset fitting in l.
enum class SubsetRoute { automatic, minsup, maxinf };

/// Y_{i,j} for the given route (automatic resolves to minsup here).
VertexSet deletion_set(const WeightedGraph& g, const CliquePath& path, std::size_t i, std::size_t j,
                       Weight l, SubsetRoute route);

struct DpState {
    /// dpt[q] = min(k_q, k+1).
    std::vector<Weight> dpt;
    /// choice[q] = the predecessor index i that last improved dpt[q];
    /// npos while dpt[q] = k+1.
    std::vector<std::size_t> choice;

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};

struct IntervalResult {
    bool yes = false;
    /// Original ids; meaningful only when yes.
    VertexSet witness;
    /// Table over the clique path of the positive-weight subgraph.
    DpState dp;
};

/// Clique-path dynamic program for wCOC on interval graphs. With the
/// automatic route minsup is used when k <= l and maxinf otherwise.
IntervalResult solve_wcoc_interval(const WeightedGraph& g, const IntervalModel& model, Weight k,
                                   Weight l, SubsetRoute route = SubsetRoute::automatic);

struct FastCocResult {
    bool yes = false;
    /// dpt[t]: the minimum number of deletions (when <= k).
    Weight count = 0;
    /// Filled when requested: separators on the chosen chain plus greedily
    /// picked vertices of each V_{i,j}.
    std::optional<VertexSet> witness;
};

/// O(n^2) unit-weight specialisation. Throws PreconditionError on non-unit weights.
FastCocResult solve_coc_interval_fast(const WeightedGraph& g, const IntervalModel& model, Weight k,
                                      Weight l, bool materialize_witness = false);

/// |V_{i,j}| and |S_j \ S_i| for all 0 <= i < j <= t, from prefix counts and
/// the last-clique index of each vertex. Entries with i >= j are zero.
struct UnitTables {
    std::vector<std::vector<std::int64_t>> between_size;
    std::vector<std::vector<std::int64_t>> separator_gain;
};

UnitTables unit_tables(const CliquePath& path);

struct IntegrityIntervalResult {
    bool yes = false;
    VertexSet witness;
    /// The accepting split p = k + l.
    Weight k = 0;
    Weight l = 0;
};

/// Tries k = 0..p with l = p - k against the wCOC dynamic program and
/// reports the first accepting split.
IntegrityIntervalResult solve_vi_interval(const WeightedGraph& g, const IntervalModel& model, Weight p);

} // namespace vulnkit
