// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "brute.hpp"
#include "vulnkit/branching.hpp"
#include "vulnkit/interval.hpp"
#include "vulnkit/kernels.hpp"
#include "vulnkit/oracle.hpp"
#include "vulnkit/random_instances.hpp"
#include "vulnkit/reductions.hpp"
#include "vulnkit/special_classes.hpp"

using namespace vulnkit;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

/// Collects violations for one criterion; keeps the first few messages.
class Tally {
public:
    void check(bool ok, const std::function<std::string()>& describe) {
        ++checks_;
        if (ok)
            return;
        ++failures_;
        if (examples_.size() < 5)
            examples_.push_back(describe());
    }

    std::size_t checks() const { return checks_; }
    std::size_t failures() const { return failures_; }

    std::string summary() const {
        std::ostringstream out;
        out << checks_ << " checks, " << failures_ << " violations";
        for (const auto& e : examples_)
            out << "\n    - " << e;
        return out.str();
    }

private:
    std::size_t checks_ = 0;
    std::size_t failures_ = 0;
    std::vector<std::string> examples_;
};

std::string describe(const WeightedGraph& g) {
    std::ostringstream out;
    out << "n=" << g.size() << " w=[";
    for (std::size_t i = 0; i < g.size(); ++i)
        out << (i ? "," : "") << g.weights()[i];
    out << "] e=[";
    for (const auto& [u, v] : g.edges())
        out << u << "-" << v << " ";
    out << "]";
    return out.str();
}

struct WviCase {
    WeightedGraph g;
    Weight p;
};

struct WcocCase {
    WeightedGraph g;
    std::optional<IntervalModel> model;
    Weight k;
    Weight l;
};

/// Criteria 1-4 share these corpora.
std::vector<WviCase> wvi_corpus() {
    std::vector<WviCase> out;
    Rng rng(20240101);
    for (int i = 0; i < 500; ++i) {
        const std::size_t n = 1 + rng() % 12;
        const double density = std::uniform_real_distribution<double>(0.05, 0.7)(rng);
        auto g = random_graph(rng, n, density, 4);
        out.push_back({std::move(g), static_cast<Weight>(rng() % 11)});
    }
    return out;
}

std::vector<WcocCase> wcoc_corpus() {
    std::vector<WcocCase> out;
    Rng rng(20240202);
    for (int i = 0; i < 500; ++i) {
        const std::size_t n = 1 + rng() % 12;
        WcocCase c;
        if (i % 2 == 0) {
            auto model = random_interval_model(rng, n, 2 * static_cast<std::int64_t>(n), 1 + rng() % 6);
            c.g = intersection_graph(model, random_graph(rng, n, 0, 4).weights());
            c.model = std::move(model);
        } else {
            c.g = random_graph(rng, n, std::uniform_real_distribution<double>(0.05, 0.7)(rng), 4);
        }
        c.k = static_cast<Weight>(rng() % 7);
        c.l = static_cast<Weight>(rng() % 7);
        out.push_back(std::move(c));
    }
    return out;
}

struct Outcome {
    bool pass;
    std::string detail;
};

Outcome criterion_wvi_oracle(const std::vector<WviCase>& corpus) {
    Tally t;
    const auto start = Clock::now();
    for (const auto& c : corpus) {
        const bool truth = oracle_wvi(c.g).iota <= c.p;
        auto direct = solve_wvi_branch(c.g, c.p);
        auto pipeline = solve_wvi_kernel_branch(c.g, c.p);
        t.check(direct.yes == truth, [&] { return "branch verdict, p=" + std::to_string(c.p) + " " + describe(c.g); });
        t.check(pipeline.yes == truth,
                [&] { return "kernel-branch verdict, p=" + std::to_string(c.p) + " " + describe(c.g); });
        if (direct.yes)
            t.check(static_cast<bool>(verify_wvi(c.g, c.p, direct.witness)), [&] { return "branch witness"; });
        if (pipeline.yes)
            t.check(static_cast<bool>(verify_wvi(c.g, c.p, pipeline.witness)), [&] { return "pipeline witness"; });
    }
    const double secs = seconds_since(start);
    t.check(secs < 60, [&] { return "runtime " + std::to_string(secs) + " s"; });
    return {t.failures() == 0, std::to_string(corpus.size()) + " instances in " + std::to_string(secs) + " s; " +
                                   t.summary()};
}

Outcome criterion_wcoc_oracle(const std::vector<WcocCase>& corpus) {
    Tally t;
    std::size_t interval_cases = 0;
    const auto start = Clock::now();
    for (const auto& c : corpus) {
        const bool truth = oracle_wcoc(c.g, c.l).kmin <= c.k;
        auto tag = [&] {
            return "k=" + std::to_string(c.k) + " l=" + std::to_string(c.l) + " " + describe(c.g);
        };
        auto direct = solve_wcoc_branch(c.g, c.k, c.l);
        auto pipeline = solve_wcoc_kernel_branch(c.g, c.k, c.l);
        t.check(direct.yes == truth, [&] { return "branch verdict " + tag(); });
        t.check(pipeline.yes == truth, [&] { return "kernel-branch verdict " + tag(); });
        if (direct.yes)
            t.check(static_cast<bool>(verify_wcoc(c.g, c.k, c.l, direct.witness)), [&] { return "branch witness " + tag(); });
        if (pipeline.yes)
            t.check(static_cast<bool>(verify_wcoc(c.g, c.k, c.l, pipeline.witness)),
                    [&] { return "pipeline witness " + tag(); });
        if (c.model) {
            ++interval_cases;
            auto dp = solve_wcoc_interval(c.g, *c.model, c.k, c.l);
            t.check(dp.yes == truth, [&] { return "interval DP verdict " + tag(); });
            if (dp.yes)
                t.check(static_cast<bool>(verify_wcoc(c.g, c.k, c.l, dp.witness)),
                        [&] { return "interval DP witness " + tag(); });
        }
    }
    const double secs = seconds_since(start);
    t.check(secs < 60, [&] { return "runtime " + std::to_string(secs) + " s"; });
    return {t.failures() == 0, std::to_string(corpus.size()) + " instances (" + std::to_string(interval_cases) +
                                   " interval) in " + std::to_string(secs) + " s; " + t.summary()};
}

Outcome criterion_kernel_bounds(const std::vector<WviCase>& wvi, const std::vector<WcocCase>& wcoc) {
    Tally t;
    std::size_t reduced = 0;
    for (const auto& c : wvi) {
        auto k = kernelize_wvi(c.g, c.p);
        if (k.outcome != KernelOutcome::reduced)
            continue;
        ++reduced;
        t.check(static_cast<Weight>(k.graph.size()) <= c.p * c.p * c.p,
                [&] { return "wVI kernel size " + std::to_string(k.graph.size()) + " p=" + std::to_string(c.p); });
        for (Weight w : k.graph.weights())
            t.check(w <= c.p, [&] { return "wVI kernel weight " + std::to_string(w) + " p=" + std::to_string(c.p); });
    }
    for (const auto& c : wcoc) {
        auto k = kernelize_wcoc(c.g, c.k, c.l);
        if (k.outcome != KernelOutcome::reduced)
            continue;
        ++reduced;
        const Weight bound = c.k * c.l * (c.k + c.l) + c.k;
        t.check(static_cast<Weight>(k.graph.size()) <= bound,
                [&] { return "wCOC kernel size " + std::to_string(k.graph.size()) + " > " + std::to_string(bound); });
        for (Weight w : k.graph.weights())
            t.check(w <= c.k + c.l, [&] { return "wCOC kernel weight " + std::to_string(w); });
    }
    return {t.failures() == 0, std::to_string(reduced) + " reduced kernels; " + t.summary()};
}

Outcome criterion_search_bounds(const std::vector<WviCase>& wvi, const std::vector<WcocCase>& wcoc) {
    Tally t;
    std::uint64_t deepest = 0;
    std::uint64_t largest = 0;
    for (const auto& c : wvi) {
        auto direct = solve_wvi_branch(c.g, c.p);
        auto pipeline = solve_wvi_kernel_branch(c.g, c.p);
        deepest = std::max(deepest, direct.stats.max_depth);
        t.check(direct.stats.max_depth <= static_cast<std::uint64_t>(c.p),
                [&] { return "wVI depth " + std::to_string(direct.stats.max_depth) + " p=" + std::to_string(c.p); });
        t.check(pipeline.stats.max_depth <= static_cast<std::uint64_t>(c.p),
                [&] { return "wVI kernel-branch depth " + std::to_string(pipeline.stats.max_depth); });
    }
    for (const auto& c : wcoc) {
        auto direct = solve_wcoc_branch(c.g, c.k, c.l);
        auto pipeline = solve_wcoc_kernel_branch(c.g, c.k, c.l);
        const auto bound = wcoc_search_tree_bound(c.k, c.l);
        largest = std::max(largest, direct.stats.nodes_expanded);
        t.check(direct.stats.nodes_expanded <= bound, [&] {
            return "wCOC nodes " + std::to_string(direct.stats.nodes_expanded) + " > " + std::to_string(bound);
        });
        t.check(pipeline.stats.nodes_expanded <= bound,
                [&] { return "wCOC kernel-branch nodes " + std::to_string(pipeline.stats.nodes_expanded); });
        t.check(direct.stats.max_depth <= static_cast<std::uint64_t>(c.k), [&] { return "wCOC depth"; });
    }
    return {t.failures() == 0, "max wVI depth " + std::to_string(deepest) + ", max wCOC nodes " +
                                   std::to_string(largest) + "; " + t.summary()};
}

Outcome criterion_interval_fast_path() {
    Tally t;
    Rng rng(20240303);
    std::size_t oracle_checked = 0;
    for (int i = 0; i < 300; ++i) {
        const bool small = i % 3 == 0;
        const std::size_t n = small ? 1 + rng() % 12 : 13 + rng() % 48;
        auto model = random_interval_model(rng, n, 2 * static_cast<std::int64_t>(n), 1 + rng() % 8);
        auto g = intersection_graph(model, std::vector<Weight>(n, 1));
        const Weight k = static_cast<Weight>(rng() % (n + 1));
        const Weight l = static_cast<Weight>(rng() % (n / 2 + 2));
        auto tag = [&] { return "k=" + std::to_string(k) + " l=" + std::to_string(l) + " " + describe(g); };

        auto fast = solve_coc_interval_fast(g, model, k, l, true);
        auto slow = solve_wcoc_interval(g, model, k, l);
        t.check(fast.yes == slow.yes, [&] { return "fast vs weighted verdict " + tag(); });
        if (fast.yes) {
            t.check(fast.count == slow.dp.dpt.back(), [&] { return "deletion count " + tag(); });
            t.check(static_cast<bool>(verify_wcoc(g, k, l, *fast.witness)), [&] { return "fast witness " + tag(); });
        }
        if (small) {
            ++oracle_checked;
            const bool truth = oracle_wcoc(g, l).kmin <= k;
            t.check(fast.yes == truth, [&] { return "fast vs oracle " + tag(); });
        }

        auto path = build_clique_path(model, g);
        auto tables = unit_tables(path);
        for (std::size_t a = 0; a < path.t(); ++a)
            for (std::size_t b = a + 1; b <= path.t(); ++b) {
                const auto between = static_cast<std::int64_t>(between_set(path, a, b).size());
                VertexSet gain;
                std::set_difference(path.separators[b].begin(), path.separators[b].end(),
                                    path.separators[a].begin(), path.separators[a].end(), std::back_inserter(gain));
                t.check(tables.between_size[a][b] == between, [&] { return "|V_ij| table " + tag(); });
                t.check(tables.separator_gain[a][b] == static_cast<std::int64_t>(gain.size()),
                        [&] { return "|S_j \\ S_i| table " + tag(); });
            }
    }
    return {t.failures() == 0, "300 models, " + std::to_string(oracle_checked) + " oracle-checked; " + t.summary()};
}

/// Reduction soundness on one source graph; returns the number of instances built.
std::size_t check_reductions_on(const WeightedGraph& g, Tally& t) {
    const auto n = static_cast<Weight>(g.size());
    const auto m = static_cast<Weight>(g.num_edges());
    const OracleOptions wide{24};
    std::size_t built = 0;
    auto tag = [&](const std::string& what, Weight k) {
        return what + " k=" + std::to_string(k) + " " + describe(g);
    };

    for (Weight k = 1; k < n; ++k) {
        const bool clique = brute::has_clique(g, static_cast<std::size_t>(k));
        // the incidence argument needs C(k,2) <= m; below that every k is a no-source
        if (pairs(k) <= m) {
            auto r = reduce_clique_to_coc_split(g, k);
            ++built;
            const bool yes = oracle_wcoc(r.graph, r.params.at("l"), wide).kmin <= r.params.at("k");
            t.check(yes == clique, [&] { return tag("clique-coc-split", k); });
            t.check(r.split && is_split_partition(r.graph, *r.split), [&] { return tag("incidence split", k); });
        }
        if (pairs(k) <= m) {
            auto r = reduce_clique_to_wvi_split(g, k);
            ++built;
            const bool yes = oracle_wvi(r.graph, wide).iota <= r.params.at("p");
            t.check(yes == clique, [&] { return tag("clique-wvi-split", k); });

            auto c = reduce_clique_to_vi_chordal(g, k);
            ++built;
            t.check(c.graph.size() > 12 || brute::is_chordal(c.graph), [&] { return tag("chordality", k); });
            // G* plus a disjoint clique K_s: deleting from the clique never helps
            // beyond max(wcc, s), so iota = min over X ⊆ V(G*) of |X| + max(wcc(G* - X), s).
            auto star = incidence_split_graph(g).graph;
            const Weight s = static_cast<Weight>(c.graph.size() - star.size());
            bool yes_chordal;
            if (c.graph.size() <= 22) {
                yes_chordal = oracle_wvi(c.graph, wide).iota <= c.params.at("p");
            } else {
                Weight best = std::numeric_limits<Weight>::max();
                for (std::uint64_t x = 0; x < (std::uint64_t{1} << star.size()); ++x)
                    best = std::min(best, static_cast<Weight>(std::popcount(x)) +
                                              std::max(brute::heaviest_after_removal(star, x), s));
                yes_chordal = best <= c.params.at("p");
            }
            t.check(yes_chordal == clique, [&] { return tag("clique-vi-chordal", k); });
        }
    }
    for (Weight q = 1; q <= n; ++q) {
        if (pairs(q) > m)
            continue;
        auto r = reduce_clique_to_coc_ell(g, q);
        ++built;
        const bool yes = oracle_wcoc(r.graph, r.params.at("l"), wide).kmin <= r.params.at("k");
        t.check(yes == brute::has_clique(g, static_cast<std::size_t>(q)), [&] { return tag("clique-coc-ell q", q); });
    }
    for (Weight k = 1; k < n; ++k)
        t.check(check_incidence_lemma(g, k), [&] { return tag("incidence lemma", k); });

    // bipartite sources feed the biclique construction
    std::vector<int> color(g.size(), -1);
    bool bipartite = true;
    for (Vertex s = 0; s < n && bipartite; ++s) {
        if (color[static_cast<std::size_t>(s)] >= 0)
            continue;
        color[static_cast<std::size_t>(s)] = 0;
        std::vector<Vertex> queue = {s};
        for (std::size_t h = 0; h < queue.size() && bipartite; ++h)
            for (Vertex v : g.neighbors(queue[h])) {
                auto& cv = color[static_cast<std::size_t>(v)];
                if (cv < 0) {
                    cv = 1 - color[static_cast<std::size_t>(queue[h])];
                    queue.push_back(v);
                } else if (cv == color[static_cast<std::size_t>(queue[h])]) {
                    bipartite = false;
                }
            }
    }
    if (bipartite) {
        Bipartition parts;
        for (Vertex v = 0; v < n; ++v)
            (color[static_cast<std::size_t>(v)] == 0 ? parts.part_a : parts.part_b).push_back(v);
        for (Weight k = 1; 2 * k <= n; ++k) {
            auto r = reduce_bcbs_to_vi_cobipartite(g, parts, k);
            ++built;
            const bool yes = oracle_wvi(r.graph).iota <= r.params.at("p");
            const bool truth = brute::has_balanced_biclique(g, parts.part_a, parts.part_b, static_cast<std::size_t>(k));
            t.check(yes == truth, [&] { return tag("bcbs-cobipartite", k); });
            t.check(brute::is_bipartite(complement(r.graph)), [&] { return tag("co-bipartite", k); });
        }
    }
    return built;
}

Outcome criterion_reductions() {
    Tally t;
    std::size_t graphs = 0;
    std::size_t instances = 0;
    for (std::size_t n = 1; n <= 4; ++n)
        brute::for_each_graph(n, [&](const WeightedGraph& g) {
            ++graphs;
            instances += check_reductions_on(g, t);
        });
    Rng rng(20240404);
    for (int i = 0; i < 240; ++i) {
        const std::size_t n = 5 + rng() % 2;
        WeightedGraph g;
        if (i % 3 == 0) {
            // random bipartite graph so the biclique construction is exercised
            const std::size_t a = 1 + rng() % (n - 1);
            std::bernoulli_distribution coin(0.6);
            std::vector<Edge> edges;
            for (Vertex u = 0; static_cast<std::size_t>(u) < a; ++u)
                for (Vertex v = static_cast<Vertex>(a); static_cast<std::size_t>(v) < n; ++v)
                    if (coin(rng))
                        edges.emplace_back(u, v);
            g = WeightedGraph::unit(n, edges);
        } else {
            g = random_graph(rng, n, std::uniform_real_distribution<double>(0.2, 0.9)(rng), 1);
        }
        ++graphs;
        instances += check_reductions_on(g, t);
    }
    std::size_t partitions = 0;
    for (int i = 0; i < 300; ++i) {
        std::vector<Weight> values(1 + rng() % 8);
        for (auto& v : values)
            v = 1 + static_cast<Weight>(rng() % 9);
        if (std::accumulate(values.begin(), values.end(), Weight{0}) % 2)
            values.back() += 1;
        auto r = reduce_partition_to_wcoc_complete(values);
        ++partitions;
        const bool yes = oracle_wcoc(r.graph, r.params.at("l")).kmin <= r.params.at("k");
        t.check(yes == brute::has_equal_partition(values), [&] { return "partition-complete"; });
    }
    return {t.failures() == 0, std::to_string(graphs) + " source graphs, " + std::to_string(instances) +
                                   " graph instances, " + std::to_string(partitions) + " partition instances; " +
                                   t.summary()};
}

Outcome criterion_lemmas() {
    Tally t;
    std::size_t graphs = 0;
    auto simplicial_free = [&](const WeightedGraph& g) {
        auto sets = enumerate_iota_sets(g);
        return std::any_of(sets.begin(), sets.end(), [&](const VertexSet& x) {
            return std::none_of(x.begin(), x.end(), [&](Vertex v) { return is_simplicial(g, v); });
        });
    };
    for (std::size_t n = 1; n <= 7; ++n)
        brute::for_each_graph(n, [&](const WeightedGraph& g) {
            ++graphs;
            t.check(simplicial_free(g), [&] { return "no simplicial-free iota-set " + describe(g); });
        });
    Rng rng(20240505);
    for (int i = 0; i < 2000; ++i) {
        auto g = random_graph(rng, 1 + rng() % 7, std::uniform_real_distribution<double>(0.1, 0.9)(rng), 4);
        ++graphs;
        t.check(simplicial_free(g), [&] { return "weighted: no simplicial-free iota-set " + describe(g); });
    }
    for (int i = 0; i < 300; ++i) {
        auto g = random_graph(rng, 1 + rng() % 10, std::uniform_real_distribution<double>(0.1, 0.7)(rng), 1);
        t.check(oracle_wcoc(g, 1).kmin == static_cast<Weight>(oracle_vertex_cover(g)),
                [&] { return "COC l=1 vs vertex cover " + describe(g); });
    }
    for (int i = 0; i < 200; ++i) {
        auto g = random_graph(rng, 1 + rng() % 10, std::uniform_real_distribution<double>(0.1, 0.7)(rng), 4);
        const Weight iota = oracle_wvi(g).iota;
        std::vector<Weight> kmin;
        for (Weight l = 0; l <= g.total_weight(); ++l)
            kmin.push_back(oracle_wcoc(g, l).kmin);
        for (Weight p = 0; p <= g.total_weight(); ++p) {
            bool split = false;
            for (Weight l = 0; l <= p; ++l)
                split = split || kmin[static_cast<std::size_t>(l)] <= p - l;
            t.check(split == (iota <= p), [&] { return "VI decomposition p=" + std::to_string(p) + " " + describe(g); });
        }
    }
    return {t.failures() == 0, std::to_string(graphs) + " graphs for the simplicial lemma; " + t.summary()};
}

Outcome criterion_special_classes() {
    Tally t;
    Rng rng(20240606);
    for (int i = 0; i < 300; ++i) {
        const std::size_t c = rng() % 7;
        const std::size_t ind = rng() % (11 - c);
        auto g = random_split_graph(rng, c, ind, std::uniform_real_distribution<double>(0.1, 0.9)(rng));
        auto r = solve_vi_split(g);
        t.check(r.iota == oracle_wvi(g).iota, [&] { return "split iota " + describe(g); });
        t.check(make_certificate(g, r.witness).integrity() == r.iota, [&] { return "split witness " + describe(g); });
    }
    for (int i = 0; i < 300; ++i) {
        auto g = random_complete_graph(rng, 1 + rng() % 12, 8);
        const Weight k = static_cast<Weight>(rng() % (g.total_weight() + 1));
        const Weight l = static_cast<Weight>(rng() % (g.total_weight() + 1));
        auto r = solve_wcoc_complete(g, k, l);
        t.check(r.yes == (oracle_wcoc(g, l).kmin <= k), [&] { return "complete wCOC " + describe(g); });
        if (r.yes)
            t.check(static_cast<bool>(verify_wcoc(g, k, l, r.witness)), [&] { return "complete wCOC witness"; });
    }
    for (int i = 0; i < 200; ++i) {
        auto g = random_complete_graph(rng, 1 + rng() % 6, 8);
        t.check(solve_wvi_complete(g).iota == oracle_wvi(g).iota, [&] { return "complete wVI " + describe(g); });
    }
    return {t.failures() == 0, t.summary()};
}

Outcome criterion_scaling() {
    Tally t;
    Rng rng(20240707);
    std::ostringstream times;
    // short intervals give many small cliques, long ones a few hundred-vertex cliques
    const std::int64_t lengths[] = {12, 12, 12, 120, 400, 1600};
    for (int i = 0; i < 6; ++i) {
        const std::size_t n = 2000;
        auto model = random_interval_model(rng, n, 4 * static_cast<std::int64_t>(n), lengths[i]);
        auto g = intersection_graph(model, random_graph(rng, n, 0, 4).weights());
        const Weight k = i % 3 == 0 ? 50 : 1 + static_cast<Weight>(rng() % 50);
        const Weight l = i % 3 == 0 ? 50 : 1 + static_cast<Weight>(rng() % 50);
        const auto start = Clock::now();
        auto r = solve_wcoc_interval(g, model, k, l);
        const double secs = seconds_since(start);
        times << " weighted(k=" << k << ",l=" << l << ",m=" << g.num_edges() << ")=" << secs << "s";
        t.check(secs < 10, [&] { return "weighted DP took " + std::to_string(secs) + " s"; });
        if (r.yes)
            t.check(static_cast<bool>(verify_wcoc(g, k, l, r.witness)), [&] { return "weighted DP witness"; });
    }
    for (int i = 0; i < 6; ++i) {
        const std::size_t n = 5000;
        auto model = random_interval_model(rng, n, 4 * static_cast<std::int64_t>(n), lengths[i]);
        auto g = intersection_graph(model, std::vector<Weight>(n, 1));
        const Weight k = static_cast<Weight>(n / 4);
        const Weight l = 1 + static_cast<Weight>(rng() % 20);
        const auto start = Clock::now();
        auto r = solve_coc_interval_fast(g, model, k, l);
        const double secs = seconds_since(start);
        times << " fast(l=" << l << ",verdict=" << (r.yes ? "yes" : "no") << ")=" << secs << "s";
        t.check(secs < 5, [&] { return "fast path took " + std::to_string(secs) + " s"; });
    }
    return {t.failures() == 0, times.str().substr(1) + "; " + t.summary()};
}

} // namespace

int main() {
    const auto wvi = wvi_corpus();
    const auto wcoc = wcoc_corpus();
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"wVI oracle equivalence", [&] { return criterion_wvi_oracle(wvi); }},
        {"wCOC oracle equivalence", [&] { return criterion_wcoc_oracle(wcoc); }},
        {"kernel bounds", [&] { return criterion_kernel_bounds(wvi, wcoc); }},
        {"search-tree bounds", [&] { return criterion_search_bounds(wvi, wcoc); }},
        {"interval fast path", criterion_interval_fast_path},
        {"reduction soundness", criterion_reductions},
        {"lemma-level properties", criterion_lemmas},
        {"special classes", criterion_special_classes},
        {"scaling smoke test", criterion_scaling},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = Clock::now();
        Outcome o = criteria[i].second();
        failed += o.pass ? 0 : 1;
        std::printf("%s  %zu. %s (%.1f s): %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                    seconds_since(start), o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria failed\n", failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
