#include "doctest.h"

#include <algorithm>

#include "pmc/classify.hpp"
#include "pmc/generators.hpp"
#include "pmc/oracle.hpp"
#include "pmc/solver_clawfree.hpp"
#include "support/test_support.hpp"

using namespace pmc;

TEST_CASE("degree-2 path detection") {
    auto c6 = find_degree2_p4(cycle_graph(6));
    REQUIRE(c6.has_value());
    auto [a, b, c, d] = *c6;
    Graph g6 = cycle_graph(6);
    CHECK(g6.degree(b) == 2);
    CHECK(g6.degree(c) == 2);
    CHECK(g6.has_edge(a, b));
    CHECK(g6.has_edge(b, c));
    CHECK(g6.has_edge(c, d));
    CHECK_FALSE(g6.has_edge(a, d));

    CHECK_FALSE(find_degree2_p4(prism_graph()).has_value());
    CHECK_FALSE(find_degree2_p4(cycle_graph(4)).has_value()); // ends adjacent

    // Two triangles joined by a three-edge path: the middle path qualifies.
    Graph dumbbell(8, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {2, 6}, {6, 7}, {7, 3}});
    auto mid = find_degree2_p4(dumbbell);
    REQUIRE(mid.has_value());
    CHECK(std::get<1>(std::tuple{(*mid)[0], (*mid)[1], (*mid)[2], (*mid)[3]}) == 6);
}

TEST_CASE("cluster construction") {
    ClusterGraph prism = build_clusters(prism_graph());
    REQUIRE(prism.clusters.size() == 2);
    CHECK(prism.clusters[0].vertices.count() == 3);
    CHECK(prism.clusters[1].vertices.count() == 3);
    CHECK(prism.links.size() == 3);
    for (const auto& link : prism.links) CHECK(link.interior == -1);
    CHECK(prism.clusters[0].core.none()); // every vertex carries a rung
    CHECK(prism.clusters[0].even());

    ClusterGraph k4 = build_clusters(complete_graph(4));
    REQUIRE(k4.clusters.size() == 1);
    CHECK(k4.clusters[0].vertices.all());

    ClusterGraph c8 = build_clusters(cycle_graph(8));
    CHECK(c8.clusters.empty());

    CHECK_THROWS_AS(build_clusters(star_graph(3)), WrongSolverError);
}

TEST_CASE("cluster invariants on random claw-free graphs") {
    Rng rng(97);
    int done = 0;
    while (done < 60) {
        Graph g = random_clawfree(std::uniform_int_distribution<int>(4, 12)(rng), rng);
        if (g.min_degree() < 2 || find_degree2_p4(g).has_value()) continue;
        if (girth_of(g) > 3) continue;
        ClusterGraph cg = build_clusters(g);
        // Every triangle sits inside one cluster.
        for (auto [u, v] : g.edges()) {
            VertexSet common = g.adj(u) & g.adj(v);
            for (auto w = common.find_first(); w != VertexSet::npos; w = common.find_next(w)) {
                int cu = cg.cluster_of(u);
                CHECK(cu != -1);
                CHECK(cu == cg.cluster_of(v));
                CHECK(cu == cg.cluster_of(static_cast<int>(w)));
            }
        }
        // Vertices outside all clusters have degree two, and clusters are
        // immune at desk scale.
        for (int v = 0; v < g.vertex_count(); ++v)
            if (cg.cluster_of(v) == -1) CHECK(g.degree(v) == 2);
        for (const auto& c : cg.clusters) {
            if (c.vertices.count() > 20) continue;
            CHECK(is_immune(g, c.vertices));
        }
        ++done;
    }
}

TEST_CASE("claw-free fixed instances") {
    Decision prism = solve_clawfree(prism_graph());
    CHECK(prism.yes);
    // The witness cuts one triangle off: the three rungs.
    CHECK(prism.certificate->matching.pairs == std::vector<Edge>{{0, 3}, {1, 4}, {2, 5}});

    CHECK_FALSE(solve_clawfree(complete_graph(4)).yes);
    CHECK(solve_clawfree(cycle_graph(6)).yes);
    CHECK(solve_clawfree(complete_graph(2)).yes);
    CHECK_FALSE(solve_clawfree(complete_graph(6)).yes);
    CHECK_FALSE(solve_clawfree(cycle_graph(5)).yes);

    CHECK_THROWS_AS(solve_clawfree(star_graph(3)), WrongSolverError);
    Graph split(4, {{0, 1}, {2, 3}});
    CHECK_THROWS_AS(solve_clawfree(split), InputError);
}

TEST_CASE("claw-free solver equals the oracle") {
    Rng rng(101);
    int done = 0;
    while (done < 200) {
        int n = std::uniform_int_distribution<int>(2, 12)(rng);
        Graph g = random_clawfree(n, rng);
        Decision solver = solve_clawfree(g);
        Decision truth = oracle_pmc(g);
        CAPTURE(serialize(g, GraphFormat::graph6));
        CHECK(solver.yes == truth.yes);
        if (solver.yes) CHECK(verify_pmc(g, solver.certificate->matching).has_value());
        ++done;
    }
}

TEST_CASE("line graphs of small bases agree with the oracle") {
    Rng rng(103);
    int done = 0;
    while (done < 120) {
        int nb = std::uniform_int_distribution<int>(3, 8)(rng);
        Graph base = gnp(nb, 0.5, rng);
        Graph lg = line_graph(base);
        if (lg.vertex_count() < 2 || lg.vertex_count() > 12 || !is_connected(lg)) continue;
        Decision solver = solve_clawfree(lg);
        Decision truth = oracle_pmc(lg);
        CAPTURE(serialize(base, GraphFormat::graph6));
        CHECK(solver.yes == truth.yes);
        if (solver.yes) CHECK(verify_pmc(lg, solver.certificate->matching).has_value());
        ++done;
    }
}

TEST_CASE("cluster graph DOT dump") {
    std::string dot = cluster_graph_dot(build_clusters(prism_graph()));
    CHECK(dot.find("graph clusters {") != std::string::npos);
    CHECK(dot.find("c0 -- c1") != std::string::npos);
    CHECK(dot.find("(even)") != std::string::npos);
}

TEST_CASE("case analysis branches, crafted instances") {
    SUBCASE("four odd triangles in a cluster cycle merge as an odd pair") {
        std::vector<Edge> e;
        for (int i = 0; i < 4; ++i) {
            int x = 3 * i, y = 3 * i + 1, z = 3 * i + 2;
            e.push_back({x, y});
            e.push_back({y, z});
            e.push_back({x, z});
            e.push_back({y, 3 * ((i + 1) % 4)});
        }
        Graph g(12, e);
        REQUIRE(is_claw_free(g));
        Decision d = solve_clawfree(g);
        CHECK(d.yes);
        CHECK(oracle_pmc(g).yes);
        CHECK(d.stats.counters.at("merged_pair_yes") == 1);
        CHECK(d.stats.counters.at("odd_pair_merges") == 1);
    }
    SUBCASE("odd cluster grows by the interior of one of its links") {
        Graph g(12, {{0, 1}, {1, 2},  {0, 2},  {2, 3},  {3, 4},  {1, 5},
                     {4, 5}, {4, 6},  {4, 7},  {5, 6},  {5, 7},  {6, 7},
                     {7, 8}, {8, 9},  {8, 10}, {8, 11}, {9, 10}, {9, 11},
                     {10, 11}});
        REQUIRE(is_claw_free(g));
        Decision d = solve_clawfree(g);
        CHECK(d.yes);
        CHECK(oracle_pmc(g).yes);
        CHECK(d.stats.counters.at("extended_cluster_yes") == 1);
    }
    SUBCASE("degree-2 pair over a bridge between odd halves") {
        Graph g(10, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {3, 4}, {4, 5}, {5, 6},
                     {6, 7}, {6, 8}, {6, 9}, {7, 8}, {7, 9}, {8, 9}});
        REQUIRE(is_claw_free(g));
        Decision d = solve_clawfree(g);
        CHECK(d.yes);
        CHECK(oracle_pmc(g).yes);
        CHECK(d.stats.counters.at("degree2_bridge_yes") == 1);
    }
    SUBCASE("four-cycle: degree-2 pair with adjacent outer neighbors") {
        Decision d = solve_clawfree(cycle_graph(4));
        CHECK(d.yes);
        CHECK(d.stats.counters.at("degree2_path_yes") == 1);
    }
    SUBCASE("long even cycle splits off its first degree-2 pair") {
        Decision d = solve_clawfree(cycle_graph(8));
        CHECK(d.yes);
        CHECK(oracle_pmc(cycle_graph(8)).yes);
    }
}
