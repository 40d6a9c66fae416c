#include "vulnkit/interval.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <numeric>
#include <set>
#include <stdexcept>
#include <tuple>

#include "vulnkit/errors.hpp"

namespace vulnkit {

IntervalModel::IntervalModel(std::vector<Interval> intervals) : intervals_(std::move(intervals)) {
    for (std::size_t v = 0; v < intervals_.size(); ++v)
        if (intervals_[v].lo > intervals_[v].hi)
            throw std::invalid_argument("interval of vertex " + std::to_string(v) +
                                        " has lo > hi");
}

IntervalModel IntervalModel::restrict_to(std::span<const Vertex> keep) const {
    std::vector<Interval> out;
    out.reserve(keep.size());
    for (Vertex v : keep)
        out.push_back((*this)[v]);
    return IntervalModel(std::move(out));
}

std::vector<Edge> intersection_edges(const IntervalModel& model) {
    const auto& iv = model.intervals();
    std::vector<Vertex> order(iv.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
        return std::tie(iv[static_cast<std::size_t>(a)].lo, a) <
               std::tie(iv[static_cast<std::size_t>(b)].lo, b);
    });
    std::vector<Edge> edges;
    std::vector<Vertex> open;
    for (Vertex u : order) {
        const auto lo = iv[static_cast<std::size_t>(u)].lo;
        std::erase_if(open, [&](Vertex v) { return iv[static_cast<std::size_t>(v)].hi < lo; });
        for (Vertex v : open)
            edges.emplace_back(std::min(u, v), std::max(u, v));
        open.push_back(u);
    }
    std::sort(edges.begin(), edges.end());
    return edges;
}

WeightedGraph intersection_graph(const IntervalModel& model, std::vector<Weight> weights) {
    if (weights.size() != model.size())
        throw std::invalid_argument("weight count does not match interval count");
    auto edges = intersection_edges(model);
    return WeightedGraph(std::move(weights), edges);
}

void check_model(const IntervalModel& model, const WeightedGraph& g) {
    if (model.size() != g.size())
        throw PreconditionError("interval model has " + std::to_string(model.size()) +
                                " intervals but the graph has " + std::to_string(g.size()) +
                                " vertices");
    const auto expected = intersection_edges(model);
    const auto actual = g.edges();
    auto [e, a] = std::mismatch(expected.begin(), expected.end(), actual.begin(), actual.end());
    if (e == expected.end() && a == actual.end())
        return;
    auto describe = [](const Edge& pair) {
        return "(" + std::to_string(pair.first) + ", " + std::to_string(pair.second) + ")";
    };
    if (a == actual.end() || (e != expected.end() && *e < *a))
        throw PreconditionError("intervals of " + describe(*e) + " overlap but the graph has no such edge");
    throw PreconditionError("edge " + describe(*a) + " joins vertices with disjoint intervals");
}

CliquePath build_clique_path(const IntervalModel& model, const WeightedGraph& g) {
    check_model(model, g);
    const std::size_t n = g.size();
    // (coordinate, 0 = start / 1 = end, vertex)
    std::vector<std::tuple<std::int64_t, int, Vertex>> events;
    events.reserve(2 * n);
    for (Vertex v = 0; static_cast<std::size_t>(v) < n; ++v) {
        events.emplace_back(model[v].lo, 0, v);
        events.emplace_back(model[v].hi, 1, v);
    }
    std::sort(events.begin(), events.end());

    CliquePath path;
    path.cliques.emplace_back();
    std::set<Vertex> active;
    bool arrived = false;
    for (const auto& [x, kind, v] : events) {
        if (kind == 0) {
            active.insert(v);
            arrived = true;
            continue;
        }
        if (arrived)
            path.cliques.emplace_back(active.begin(), active.end());
        arrived = false;
        active.erase(v);
    }
    path.cliques.emplace_back();

    const std::size_t t = path.t();
    path.first.assign(n, 0);
    path.last.assign(n, 0);
    for (std::size_t c = t; c >= 1; --c)
        for (Vertex v : path.cliques[c])
            path.first[static_cast<std::size_t>(v)] = c;
    for (std::size_t c = 1; c <= t; ++c)
        for (Vertex v : path.cliques[c])
            path.last[static_cast<std::size_t>(v)] = c;

    path.separators.resize(t + 1);
    for (std::size_t i = 0; i <= t; ++i)
        std::set_intersection(path.cliques[i].begin(), path.cliques[i].end(),
                              path.cliques[i + 1].begin(), path.cliques[i + 1].end(),
                              std::back_inserter(path.separators[i]));
    return path;
}

VertexSet between_set(const CliquePath& path, std::size_t i, std::size_t j) {
    if (i >= j || j > path.t())
        throw std::out_of_range("between_set requires 0 <= i < j <= t");
    VertexSet out;
    for (std::size_t v = 0; v < path.first.size(); ++v)
        if (path.first[v] >= i + 1 && path.last[v] <= j)
            out.push_back(static_cast<Vertex>(v));
    return out;
}

VertexSet deletion_set(const WeightedGraph& g, const CliquePath& path, std::size_t i, std::size_t j,
                       Weight l, SubsetRoute route) {
    const VertexSet between = between_set(path, i, j);
    std::vector<Weight> weights;
    weights.reserve(between.size());
    for (Vertex v : between)
        weights.push_back(g.weight(v));
    VertexSet out;
    if (route == SubsetRoute::maxinf) {
        IndexSet kept = maxinf(weights, l);
        std::size_t next = 0;
        for (std::size_t p = 0; p < between.size(); ++p) {
            if (next < kept.size() && kept[next] == p) {
                ++next;
                continue;
            }
            out.push_back(between[p]);
        }
    } else {
        Weight total = 0;
        for (Weight w : weights)
            total = checked_add(total, w);
        for (std::size_t p : minsup(weights, total - l))
            out.push_back(between[p]);
    }
    return out;
}

namespace {

/// Set of attainable subset sums in [0, limit], grown one item at a time.
class SubsetSums {
public:
    explicit SubsetSums(Weight limit)
        : limit_(limit), words_(static_cast<std::size_t>(limit) / 64 + 1, 0) {}

    void reset() {
        std::fill(words_.begin(), words_.end(), 0);
        words_[0] = 1;
    }

    void add(Weight w) {
        const auto shift = static_cast<std::size_t>(w);
        const std::size_t word_shift = shift / 64;
        const std::size_t bit_shift = shift % 64;
        for (std::size_t i = words_.size(); i-- > word_shift;) {
            std::uint64_t moved = words_[i - word_shift] << bit_shift;
            if (bit_shift != 0 && i - word_shift > 0)
                moved |= words_[i - word_shift - 1] >> (64 - bit_shift);
            words_[i] |= moved;
        }
        trim();
    }

    bool test(Weight s) const {
        const auto i = static_cast<std::size_t>(s);
        return (words_[i / 64] >> (i % 64)) & 1;
    }

    /// Smallest attainable sum >= target, if any.
    std::optional<Weight> at_or_above(Weight target) const {
        for (Weight s = std::max<Weight>(target, 0); s <= limit_; ++s)
            if (test(s))
                return s;
        return std::nullopt;
    }

    /// Largest attainable sum <= cap.
    Weight at_or_below(Weight cap) const {
        for (Weight s = std::min(cap, limit_); s > 0; --s)
            if (test(s))
                return s;
        return 0;
    }

private:
    void trim() {
        const auto used = static_cast<std::size_t>(limit_) % 64 + 1;
        if (used < 64)
            words_.back() &= (std::uint64_t{1} << used) - 1;
    }

    Weight limit_;
    std::vector<std::uint64_t> words_;
};

/// Interval graph with weight-0 vertices removed, plus its clique path.
struct PreparedInterval {
    Subgraph cleaned;
    VertexSet zero;
    CliquePath path;
    /// Vertices grouped by first clique index, each group sorted by last index.
    std::vector<std::vector<Vertex>> by_first;

    PreparedInterval(const WeightedGraph& g, const IntervalModel& model) {
        check_model(model, g);
        for (Vertex v = 0; static_cast<std::size_t>(v) < g.size(); ++v)
            if (g.weight(v) == 0)
                zero.push_back(v);
        cleaned = delete_vertices(g, zero);
        path = build_clique_path(model.restrict_to(cleaned.parent_id), cleaned.graph);
        by_first.resize(path.t() + 2);
        for (std::size_t v = 0; v < path.first.size(); ++v)
            by_first[path.first[v]].push_back(static_cast<Vertex>(v));
        for (auto& group : by_first)
            std::sort(group.begin(), group.end(), [&](Vertex a, Vertex b) {
                return path.last[static_cast<std::size_t>(a)] < path.last[static_cast<std::size_t>(b)];
            });
    }

    IntervalResult solve(Weight k, Weight l, SubsetRoute route) const {
        IntervalResult result;
        if (k < 0 || l < 0)
            return result;
        if (route == SubsetRoute::automatic)
            route = k <= l ? SubsetRoute::minsup : SubsetRoute::maxinf;

        const WeightedGraph& g = cleaned.graph;
        const std::size_t t = path.t();
        const Weight unreached = checked_add(k, 1);
        const Weight budget = checked_add(k, l);
        DpState& dp = result.dp;
        dp.dpt.assign(t + 1, unreached);
        dp.choice.assign(t + 1, DpState::npos);
        dp.dpt[0] = 0;

        SubsetSums sums(std::min(budget, g.total_weight()));
        for (std::size_t j = 1; j <= t; ++j) {
            Weight between = 0;   // w(V_{i,j})
            Weight separator = 0; // w(S_j \ S_i)
            sums.reset();
            for (std::size_t i = j; i-- > 0;) {
                // vertices whose clique range starts at i+1 enter V_{i,j} or S_j \ S_i
                for (Vertex v : by_first[i + 1]) {
                    const Weight w = g.weight(v);
                    if (path.last[static_cast<std::size_t>(v)] <= j) {
                        between = checked_add(between, w);
                        if (between <= budget)
                            sums.add(w);
                    } else {
                        separator = checked_add(separator, w);
                    }
                }
                // V_{i,j} only grows as i decreases
                if (between > budget)
                    break;
                Weight removed;
                if (route == SubsetRoute::minsup)
                    removed = *sums.at_or_above(between - l);
                else
                    removed = between - sums.at_or_below(l);
                const Weight candidate = dp.dpt[i] + removed + separator;
                if (candidate < dp.dpt[j]) {
                    dp.dpt[j] = candidate;
                    dp.choice[j] = i;
                }
            }
        }

        result.yes = dp.dpt[t] <= k;
        if (!result.yes)
            return result;

        VertexSet x;
        for (std::size_t q = t; q > 0;) {
            const std::size_t r = dp.choice[q];
            const auto& sep = path.separators[q];
            x.insert(x.end(), sep.begin(), sep.end());
            VertexSet y = deletion_set(g, path, r, q, l, route);
            x.insert(x.end(), y.begin(), y.end());
            q = r;
        }
        result.witness = cleaned.to_parent(normalize_vertex_set(g, x));
        assert(weight_of(g, normalize_vertex_set(g, x)) == dp.dpt[t]);
        result.witness.insert(result.witness.end(), zero.begin(), zero.end());
        std::sort(result.witness.begin(), result.witness.end());
        return result;
    }
};

/// Per-row sweep for the unit-weight tables: calls visit(j, |V_{i,j}|,
/// |S_j \ S_i|) for j = i+1..t.
class UnitSweep {
public:
    explicit UnitSweep(const CliquePath& path) : path_(path), removed_at_(path.t() + 2, 0) {
        const std::size_t t = path.t();
        prefix_union_.assign(t + 1, 0);
        for (std::size_t f : path.first)
            ++prefix_union_[f];
        for (std::size_t i = 1; i <= t; ++i)
            prefix_union_[i] += prefix_union_[i - 1];
    }

    template <typename Visit>
    void row(std::size_t i, Visit&& visit) {
        const std::size_t t = path_.t();
        const auto& si = path_.separators[i];
        for (Vertex v : si)
            ++removed_at_[path_.last[static_cast<std::size_t>(v)]];
        const auto size_i = static_cast<std::int64_t>(si.size());
        std::int64_t shared = size_i; // |S_i ∩ S_j|, starting from j = i
        for (std::size_t j = i + 1; j <= t; ++j) {
            // v in S_i stays in S_j iff L(v) >= j + 1
            shared -= removed_at_[j];
            const auto size_j = static_cast<std::int64_t>(path_.separators[j].size());
            const std::int64_t union_size = prefix_union_[j] - prefix_union_[i] + size_i;
            visit(j, union_size - size_i - size_j + shared, size_j - shared);
        }
        for (Vertex v : si)
            --removed_at_[path_.last[static_cast<std::size_t>(v)]];
    }

private:
    const CliquePath& path_;
    /// |K_0 ∪ ... ∪ K_i| = number of vertices with first clique <= i.
    std::vector<std::int64_t> prefix_union_;
    std::vector<std::int64_t> removed_at_;
};

} // namespace

IntervalResult solve_wcoc_interval(const WeightedGraph& g, const IntervalModel& model, Weight k,
                                   Weight l, SubsetRoute route) {
    return PreparedInterval(g, model).solve(k, l, route);
}

UnitTables unit_tables(const CliquePath& path) {
    const std::size_t t = path.t();
    UnitTables tables;
    tables.between_size.assign(t + 1, std::vector<std::int64_t>(t + 1, 0));
    tables.separator_gain.assign(t + 1, std::vector<std::int64_t>(t + 1, 0));
    UnitSweep sweep(path);
    for (std::size_t i = 0; i < t; ++i)
        sweep.row(i, [&](std::size_t j, std::int64_t between, std::int64_t gain) {
            tables.between_size[i][j] = between;
            tables.separator_gain[i][j] = gain;
        });
    return tables;
}

FastCocResult solve_coc_interval_fast(const WeightedGraph& g, const IntervalModel& model, Weight k,
                                      Weight l, bool materialize_witness) {
    if (!g.has_unit_weights())
        throw PreconditionError("the quadratic interval algorithm requires unit weights");
    CliquePath path = build_clique_path(model, g);
    FastCocResult result;
    if (k < 0 || l < 0)
        return result;

    const std::size_t t = path.t();
    const Weight unreached = checked_add(k, 1);
    std::vector<Weight> dpt(t + 1, unreached);
    std::vector<std::size_t> choice(t + 1, DpState::npos);
    dpt[0] = 0;
    UnitSweep sweep(path);
    // dpt[i] is final once every smaller index has been relaxed into it
    for (std::size_t i = 0; i < t; ++i) {
        if (dpt[i] >= unreached)
            continue;
        sweep.row(i, [&](std::size_t j, std::int64_t between, std::int64_t gain) {
            const Weight candidate = dpt[i] + std::max<Weight>(0, between - l) + gain;
            if (candidate < dpt[j]) {
                dpt[j] = candidate;
                choice[j] = i;
            }
        });
    }

    result.yes = dpt[t] <= k;
    if (!result.yes)
        return result;
    result.count = dpt[t];
    if (materialize_witness) {
        VertexSet x;
        for (std::size_t q = t; q > 0;) {
            const std::size_t r = choice[q];
            x.insert(x.end(), path.separators[q].begin(), path.separators[q].end());
            VertexSet between = between_set(path, r, q);
            const auto excess = std::max<std::int64_t>(0, static_cast<std::int64_t>(between.size()) - l);
            x.insert(x.end(), between.begin(), between.begin() + excess);
            q = r;
        }
        result.witness = normalize_vertex_set(g, x);
    }
    return result;
}

IntegrityIntervalResult solve_vi_interval(const WeightedGraph& g, const IntervalModel& model, Weight p) {
    IntegrityIntervalResult result;
    PreparedInterval prepared(g, model);
    // cheapest deletion budgets first
    for (Weight k = 0; k <= p; ++k) {
        const Weight l = p - k;
        IntervalResult r = prepared.solve(k, l, SubsetRoute::automatic);
        if (r.yes) {
            result.yes = true;
            result.witness = std::move(r.witness);
            result.k = k;
            result.l = l;
            return result;
        }
    }
    return result;
}

} // namespace vulnkit
