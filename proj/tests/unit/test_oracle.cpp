#include <doctest.h>

#include <algorithm>
#include <cstdlib>

#include "brute.hpp"
#include "vulnkit/errors.hpp"
#include "vulnkit/oracle.hpp"
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

TEST_CASE("oracle_wvi examples") {
    CHECK(oracle_wvi(complete(3)).iota == 3);
    auto r = oracle_wvi(p3);
    CHECK(r.iota == 2);
    CHECK(r.witness == VertexSet{1});
    CHECK(oracle_wvi(WeightedGraph({7})).iota == 7);
    // first optimum in enumeration order is the empty set
    CHECK(oracle_wvi(WeightedGraph({7})).witness.empty());
}

TEST_CASE("oracle_wcoc examples") {
    auto r = oracle_wcoc(p3, 1);
    CHECK(r.kmin == 1);
    CHECK(r.witness == VertexSet{1});
    CHECK(oracle_wcoc(WeightedGraph::unit(5), 1).kmin == 0);
    CHECK(oracle_wcoc(complete(4), 1).kmin == 3);
    CHECK_THROWS(oracle_wcoc(p3, -1));
}

TEST_CASE("enumerate_iota_sets examples") {
    CHECK(enumerate_iota_sets(WeightedGraph::unit(1)) == std::vector<VertexSet>{{}, {0}});
    CHECK(enumerate_iota_sets(complete(2)).size() == 4);
    auto sets = enumerate_iota_sets(p3);
    std::size_t expected = 0;
    for (std::uint64_t m = 0; m < 8; ++m)
        expected += brute::mask_weight(p3, m) + brute::heaviest_after_removal(p3, m) == 2;
    CHECK(sets.size() == expected);
    for (const auto& x : sets)
        CHECK(make_certificate(p3, x).integrity() == 2);
}

TEST_CASE("oracle_max_clique examples") {
    CHECK(oracle_max_clique(complete(3)) == 3);
    auto c5 = WeightedGraph::unit(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
    CHECK(oracle_max_clique(c5) == 2);
    CHECK(oracle_max_clique(WeightedGraph::unit(4)) == 1);
}

TEST_CASE("oracle_balanced_biclique examples") {
    auto k22 = WeightedGraph::unit(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}});
    CHECK(oracle_balanced_biclique(k22, VertexSet{0, 1}, VertexSet{2, 3}, 2));
    auto p4 = WeightedGraph::unit(4, {{0, 1}, {1, 2}, {2, 3}});
    CHECK_FALSE(oracle_balanced_biclique(p4, VertexSet{0, 2}, VertexSet{1, 3}, 2));
    CHECK(oracle_balanced_biclique(p4, VertexSet{0, 2}, VertexSet{1, 3}, 0));
    CHECK_THROWS_AS(oracle_balanced_biclique(p4, VertexSet{0, 1}, VertexSet{2, 3}, 1), std::invalid_argument);
}

TEST_CASE("oracle_vertex_cover examples") {
    CHECK(oracle_vertex_cover(complete(2)) == 1);
    CHECK(oracle_vertex_cover(complete(3)) == 2);
    CHECK(oracle_vertex_cover(WeightedGraph::unit(3)) == 0);
}

TEST_CASE("oracles agree with the naive reference") {
    Rng rng(3);
    for (int trial = 0; trial < 150; ++trial) {
        auto g = random_graph(rng, 1 + trial % 9, 0.35, 4, trial % 5 == 0);
        CHECK(oracle_wvi(g).iota == brute::integrity(g));
        const Weight l = trial % 6;
        auto c = oracle_wcoc(g, l);
        CHECK(c.kmin == brute::min_deletion(g, l));
        CHECK(verify_wcoc(g, c.kmin, l, c.witness));
        std::size_t best = 1;
        while (best < g.size() && brute::has_clique(g, best + 1))
            ++best;
        CHECK(oracle_max_clique(g) == best);
    }
}

TEST_CASE("oracle properties") {
    Rng rng(9);
    for (int trial = 0; trial < 120; ++trial) {
        auto g = random_graph(rng, 1 + trial % 8, 0.4, 3);
        const auto iota = oracle_wvi(g).iota;
        Weight best = g.total_weight() + 1;
        for (Weight l = 0; l <= g.total_weight(); ++l)
            best = std::min(best, oracle_wcoc(g, l).kmin + l);
        CHECK(iota == best);
        for (Vertex v = 0; static_cast<std::size_t>(v) < g.size(); ++v)
            CHECK(oracle_wvi(delete_vertices(g, std::vector<Vertex>{v}).graph).iota <= iota);
        auto unit = with_unit_weights(g);
        CHECK(oracle_wcoc(unit, 1).kmin == static_cast<Weight>(oracle_vertex_cover(unit)));
    }
}

TEST_CASE("enumeration limit") {
    CHECK_THROWS_AS(oracle_wvi(WeightedGraph::unit(6), OracleOptions{5}), InstanceTooLarge);
    CHECK_NOTHROW(oracle_wvi(WeightedGraph::unit(5), OracleOptions{5}));
    setenv("VULNKIT_ORACLE_LIMIT", "4", 1);
    CHECK(default_enumeration_limit() == 4);
    setenv("VULNKIT_ORACLE_LIMIT", "junk", 1);
    CHECK(default_enumeration_limit() == 20);
    unsetenv("VULNKIT_ORACLE_LIMIT");
}
