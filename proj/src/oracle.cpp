#include "vulnkit/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <string>

#include "vulnkit/errors.hpp"

namespace vulnkit {

namespace {

using Mask = std::uint64_t;

constexpr std::size_t kHardLimit = 62;

void check_size(const WeightedGraph& g, const OracleOptions& options) {
    const std::size_t limit = std::min(options.limit, kHardLimit);
    if (g.size() > limit)
        throw InstanceTooLarge(g.size(), limit);
}

class MaskGraph {
public:
    explicit MaskGraph(const WeightedGraph& g) : weights_(g.weights()), adj_(g.size(), 0) {
        for (auto [u, v] : g.edges()) {
            adj_[static_cast<std::size_t>(u)] |= Mask{1} << v;
            adj_[static_cast<std::size_t>(v)] |= Mask{1} << u;
        }
    }

    std::size_t size() const { return weights_.size(); }
    Mask all() const { return size() == 64 ? ~Mask{0} : (Mask{1} << size()) - 1; }
    Mask adjacency(std::size_t v) const { return adj_[v]; }

    Weight weight(Mask set) const {
        Weight sum = 0;
        while (set) {
            sum += weights_[static_cast<std::size_t>(std::countr_zero(set))];
            set &= set - 1;
        }
        return sum;
    }

    /// Weight of the heaviest component of G[alive].
    Weight heaviest(Mask alive) const {
        Weight best = 0;
        while (alive) {
            Mask comp = alive & (~alive + 1);
            Mask frontier = comp;
            while (frontier) {
                Mask next = 0;
                for (Mask f = frontier; f; f &= f - 1)
                    next |= adj_[static_cast<std::size_t>(std::countr_zero(f))];
                next &= alive & ~comp;
                comp |= next;
                frontier = next;
            }
            best = std::max(best, weight(comp));
            alive &= ~comp;
        }
        return best;
    }

private:
    std::vector<Weight> weights_;
    std::vector<Mask> adj_;
};

VertexSet to_set(Mask m) {
    VertexSet out;
    while (m) {
        out.push_back(std::countr_zero(m));
        m &= m - 1;
    }
    return out;
}

/// Visits every subset of {0..n-1}: by cardinality, then lexicographically.
template <typename Visit>
void for_each_subset_in_order(std::size_t n, Visit&& visit) {
    std::vector<std::size_t> idx;
    for (std::size_t s = 0; s <= n; ++s) {
        idx.resize(s);
        for (std::size_t i = 0; i < s; ++i)
            idx[i] = i;
        while (true) {
            Mask m = 0;
            for (std::size_t i : idx)
                m |= Mask{1} << i;
            visit(m);
            // advance to next combination
            std::size_t i = s;
            while (i > 0 && idx[i - 1] == n - s + i - 1)
                --i;
            if (i == 0)
                break;
            ++idx[i - 1];
            for (std::size_t j = i; j < s; ++j)
                idx[j] = idx[j - 1] + 1;
        }
    }
}

} // namespace

std::size_t default_enumeration_limit() {
    if (const char* env = std::getenv("VULNKIT_ORACLE_LIMIT")) {
        try {
            std::size_t pos = 0;
            long long value = std::stoll(env, &pos);
            if (pos == std::string(env).size() && value >= 0)
                return static_cast<std::size_t>(value);
        } catch (const std::exception&) {
        }
    }
    return 20;
}

IntegrityOptimum oracle_wvi(const WeightedGraph& g, const OracleOptions& options) {
    check_size(g, options);
    MaskGraph mg(g);
    const Mask all = mg.all();
    Weight best = std::numeric_limits<Weight>::max();
    Mask best_set = 0;
    for_each_subset_in_order(g.size(), [&](Mask x) {
        const Weight deleted = mg.weight(x);
        if (deleted >= best)
            return;
        const Weight value = deleted + mg.heaviest(all & ~x);
        if (value < best) {
            best = value;
            best_set = x;
        }
    });
    return {best, to_set(best_set)};
}

OrderConnectivityOptimum oracle_wcoc(const WeightedGraph& g, Weight l, const OracleOptions& options) {
    if (l < 0)
        throw std::invalid_argument("component weight bound l must be non-negative");
    check_size(g, options);
    MaskGraph mg(g);
    const Mask all = mg.all();
    Weight best = std::numeric_limits<Weight>::max();
    Mask best_set = 0;
    for_each_subset_in_order(g.size(), [&](Mask x) {
        Weight cost = mg.weight(x);
        if (cost < best && mg.heaviest(all & ~x) <= l) {
            best = cost;
            best_set = x;
        }
    });
    return {best, to_set(best_set)};
}

std::vector<VertexSet> enumerate_iota_sets(const WeightedGraph& g, const OracleOptions& options) {
    const Weight iota = oracle_wvi(g, options).iota;
    MaskGraph mg(g);
    const Mask all = mg.all();
    std::vector<VertexSet> out;
    for_each_subset_in_order(g.size(), [&](Mask x) {
        if (mg.weight(x) + mg.heaviest(all & ~x) == iota)
            out.push_back(to_set(x));
    });
    return out;
}

std::size_t oracle_max_clique(const WeightedGraph& g, const OracleOptions& options) {
    check_size(g, options);
    MaskGraph mg(g);
    int best = 0;
    const Mask all = mg.all();
    for (Mask x = 1; x != 0 && x <= all; ++x) {
        int size = std::popcount(x);
        if (size <= best)
            continue;
        bool clique = true;
        for (Mask f = x; f && clique; f &= f - 1) {
            auto v = static_cast<std::size_t>(std::countr_zero(f));
            clique = (x & ~(Mask{1} << v) & ~mg.adjacency(v)) == 0;
        }
        if (clique)
            best = size;
    }
    return static_cast<std::size_t>(best);
}

bool oracle_balanced_biclique(const WeightedGraph& g, std::span<const Vertex> part_a,
                              std::span<const Vertex> part_b, std::size_t k,
                              const OracleOptions& options) {
    check_size(g, options);
    MaskGraph mg(g);
    Mask a = 0;
    Mask b = 0;
    for (Vertex v : normalize_vertex_set(g, part_a))
        a |= Mask{1} << v;
    for (Vertex v : normalize_vertex_set(g, part_b))
        b |= Mask{1} << v;
    if ((a & b) != 0 || (a | b) != mg.all())
        throw std::invalid_argument("parts do not partition the vertex set");
    for (std::size_t v = 0; v < g.size(); ++v) {
        Mask own = (a >> v) & 1 ? a : b;
        if (mg.adjacency(v) & own)
            throw std::invalid_argument("edge inside one side of the bipartition");
    }
    if (k == 0)
        return true;
    const VertexSet side_a = to_set(a);
    if (side_a.size() < k || static_cast<std::size_t>(std::popcount(b)) < k)
        return false;
    bool found = false;
    for_each_subset_in_order(side_a.size(), [&](Mask pick) {
        if (found || static_cast<std::size_t>(std::popcount(pick)) != k)
            return;
        Mask common = b;
        for (Mask f = pick; f; f &= f - 1)
            common &= mg.adjacency(static_cast<std::size_t>(side_a[static_cast<std::size_t>(std::countr_zero(f))]));
        if (static_cast<std::size_t>(std::popcount(common)) >= k)
            found = true;
    });
    return found;
}

std::size_t oracle_vertex_cover(const WeightedGraph& g, const OracleOptions& options) {
    check_size(g, options);
    const auto edges = g.edges();
    std::size_t best = g.size();
    const Mask all = MaskGraph(g).all();
    for (Mask x = 0; x <= all; ++x) {
        auto size = static_cast<std::size_t>(std::popcount(x));
        if (size >= best)
            continue;
        bool covers = std::all_of(edges.begin(), edges.end(), [&](const Edge& e) {
            return ((x >> e.first) & 1) || ((x >> e.second) & 1);
        });
        if (covers)
            best = size;
        if (x == all)
            break;
    }
    return best;
}

} // namespace vulnkit
