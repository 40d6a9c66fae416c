#include <doctest.h>

#include "brute.hpp"
#include "vulnkit/branching.hpp"
#include "vulnkit/random_instances.hpp"

using namespace vulnkit;

namespace {

WeightedGraph complete(std::size_t n) {
    std::vector<Edge> e;
    for (Vertex u = 0; static_cast<std::size_t>(u) < n; ++u)
        for (Vertex v = u + 1; static_cast<std::size_t>(v) < n; ++v)
            e.emplace_back(u, v);
    return WeightedGraph::unit(n, e);
}

const auto p3 = WeightedGraph::unit(3, {{0, 1}, {1, 2}});

} // namespace

TEST_CASE("find_heavy_connected_set") {
    auto p5 = WeightedGraph::unit(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
    CHECK(find_heavy_connected_set(p5, 3, 3) == VertexSet{0, 1, 2});
    CHECK_FALSE(find_heavy_connected_set(complete(2), 3, 3));
    CHECK(find_heavy_connected_set(WeightedGraph({10}), 2, 2) == VertexSet{0});
    CHECK_THROWS(find_heavy_connected_set(WeightedGraph({0, 1}), 2, 2));
    CHECK_THROWS(find_heavy_connected_set(p5, 2, 3));
}

TEST_CASE("heavy sets are connected, small and heavy") {
    Rng rng(4);
    for (int trial = 0; trial < 200; ++trial) {
        auto g = random_graph(rng, 1 + rng() % 12, 0.25, 4);
        const std::size_t cap = 1 + rng() % 6;
        const Weight floor = 1 + static_cast<Weight>(rng() % cap);
        auto u = find_heavy_connected_set(g, cap, floor);
        if (!u) {
            CHECK(wcc(g) < floor);
            continue;
        }
        CHECK(u->size() <= cap);
        CHECK(weight_of(g, *u) >= floor);
        CHECK(components(induced_subgraph(g, *u).graph).size() == 1);
    }
}

TEST_CASE("solve_wvi_branch examples") {
    auto r = solve_wvi_branch(p3, 2);
    CHECK(r.yes);
    CHECK(r.witness == VertexSet{1});
    CHECK_FALSE(solve_wvi_branch(complete(4), 3).yes);
    auto e = solve_wvi_branch(WeightedGraph::unit(5), 1);
    CHECK(e.yes);
    CHECK(e.witness.empty());
}

TEST_CASE("solve_wcoc_branch examples") {
    auto r = solve_wcoc_branch(p3, 1, 1);
    CHECK(r.yes);
    CHECK(r.witness == VertexSet{1});
    CHECK_FALSE(solve_wcoc_branch(complete(4), 2, 1).yes);
    auto single = solve_wcoc_branch(WeightedGraph::unit(1), 1, 0);
    CHECK(single.yes);
    CHECK(single.witness == VertexSet{0});
}

TEST_CASE("edge bound rejects dense instances at the root") {
    auto r = solve_wvi_branch(complete(6), 2);
    CHECK_FALSE(r.yes);
    CHECK(r.stats.edge_bound_rejected);
    CHECK(r.stats.nodes_expanded == 0);
}

TEST_CASE("weight-0 vertices end up in the witness") {
    auto g = WeightedGraph({1, 0, 1}, {{0, 1}, {1, 2}});
    auto r = solve_wcoc_branch(g, 0, 1);
    CHECK(r.yes);
    CHECK(r.witness == VertexSet{1});
}

TEST_CASE("search tree bound") {
    CHECK(wcoc_search_tree_bound(0, 5) == 1);
    CHECK(wcoc_search_tree_bound(2, 1) == 7);
    CHECK(wcoc_search_tree_bound(3, 0) == 4);
    CHECK(wcoc_search_tree_bound(2, 2) == 13);
    CHECK(wcoc_search_tree_bound(200, 200) == UINT64_MAX);
}

TEST_CASE("branching agrees with brute force and respects its bounds") {
    Rng rng(8);
    for (int trial = 0; trial < 200; ++trial) {
        auto g = random_graph(rng, 1 + rng() % 10, 0.1 + 0.05 * (trial % 8), 4, trial % 9 == 0);
        const Weight p = static_cast<Weight>(rng() % 9);
        auto w = solve_wvi_branch(g, p);
        CHECK(w.yes == (brute::integrity(g) <= p));
        CHECK(w.stats.max_depth <= static_cast<std::uint64_t>(p));
        if (w.yes)
            CHECK(verify_wvi(g, p, w.witness));
        auto wp = solve_wvi_kernel_branch(g, p);
        CHECK(wp.yes == w.yes);
        if (wp.yes)
            CHECK(verify_wvi(g, p, wp.witness));

        const Weight k = static_cast<Weight>(rng() % 6);
        const Weight l = static_cast<Weight>(rng() % 6);
        auto c = solve_wcoc_branch(g, k, l);
        CHECK(c.yes == (brute::min_deletion(g, l) <= k));
        CHECK(c.stats.max_depth <= static_cast<std::uint64_t>(k));
        CHECK(c.stats.nodes_expanded <= wcoc_search_tree_bound(k, l));
        if (c.yes)
            CHECK(verify_wcoc(g, k, l, c.witness));
        auto cp = solve_wcoc_kernel_branch(g, k, l);
        CHECK(cp.yes == c.yes);
        if (cp.yes)
            CHECK(verify_wcoc(g, k, l, cp.witness));
    }
}
