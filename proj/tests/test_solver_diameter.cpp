#include "doctest.h"

#include "pmc/classify.hpp"
#include "pmc/generators.hpp"
#include "pmc/oracle.hpp"
#include "pmc/solver_diameter.hpp"
#include "support/test_support.hpp"

using namespace pmc;

TEST_CASE("diameter-2 fixed instances") {
    CHECK(solve_diam2(cycle_graph(4)).yes);
    CHECK_FALSE(solve_diam2(complete_graph(4)).yes);
    CHECK(solve_diam2(petersen_graph()).yes);
    CHECK(solve_diam2(complete_graph(2)).yes);
    CHECK_FALSE(solve_diam2(complete_graph(6)).yes);
    CHECK_FALSE(solve_diam2(cycle_graph(5)).yes); // odd, no perfect matching

    CHECK_THROWS_AS(solve_diam2(cycle_graph(6)), WrongSolverError);
    Graph split(4, {{0, 1}, {2, 3}});
    CHECK_THROWS_AS(solve_diam2(split), InputError);
}

TEST_CASE("diameter-2 solver equals the oracle") {
    Rng rng(61);
    int done = 0;
    while (done < 200) {
        int n = std::uniform_int_distribution<int>(2, 12)(rng);
        Graph g = random_connected_diam2(n, rng);
        Decision solver = solve_diam2(g);
        Decision truth = oracle_pmc(g);
        CAPTURE(serialize(g, GraphFormat::graph6));
        CHECK(solver.yes == truth.yes);
        if (solver.yes) CHECK(verify_pmc(g, solver.certificate->matching).has_value());
        ++done;
    }
}

TEST_CASE("bipartite diameter-3 fixed instances") {
    std::vector<std::uint8_t> sides33{0, 0, 0, 1, 1, 1};
    CHECK_FALSE(solve_bip_diam3(complete_bipartite(3, 3), sides33).yes);

    std::vector<std::uint8_t> sides_c6{0, 1, 0, 1, 0, 1};
    Decision c6 = solve_bip_diam3(cycle_graph(6), sides_c6);
    CHECK(c6.yes);

    // Path: the bridge preprocessing answers before any guessing.
    std::vector<std::uint8_t> sides_p4{0, 1, 0, 1};
    Decision p4 = solve_bip_diam3(path_graph(4), sides_p4);
    CHECK(p4.yes);
    CHECK(p4.stats.counters.count("bridge_yes"));

    std::vector<std::uint8_t> sides_k2{0, 1};
    CHECK(solve_bip_diam3(complete_graph(2), sides_k2).yes);

    std::vector<std::uint8_t> sides_c8{0, 1, 0, 1, 0, 1, 0, 1};
    CHECK_THROWS_AS(solve_bip_diam3(cycle_graph(8), sides_c8), WrongSolverError); // diameter 4
    CHECK_THROWS_AS(solve_bip_diam3(complete_graph(3), {0, 1, 0}), WrongSolverError);
    CHECK_THROWS_AS(solve_bip_diam3(cycle_graph(6), sides33), InputError); // improper coloring
}

TEST_CASE("bipartite diameter-3 solver equals the oracle") {
    Rng rng(67);
    int done = 0;
    while (done < 200) {
        int n = std::uniform_int_distribution<int>(2, 14)(rng);
        std::vector<std::uint8_t> sides;
        Graph g = random_bipartite_diam_le3(n, rng, &sides);
        Decision solver = solve_bip_diam3(g, sides);
        Decision truth = oracle_pmc(g);
        CAPTURE(serialize(g, GraphFormat::graph6));
        CHECK(solver.yes == truth.yes);
        if (solver.yes) CHECK(verify_pmc(g, solver.certificate->matching).has_value());
        ++done;
    }
}

TEST_CASE("whenever the oracle says yes some guess fires") {
    // Soundness of the two-edge guessing: a yes instance must produce its yes
    // before the guess loop runs dry, which the solver's own answer already
    // witnesses; additionally the chosen certificate contains at least two
    // cut edges whenever no bridge shortcut fired.
    Rng rng(71);
    int done = 0;
    while (done < 60) {
        std::vector<std::uint8_t> sides;
        Graph g = random_bipartite_diam_le3(10, rng, &sides);
        Decision truth = oracle_pmc(g);
        if (!truth.yes) continue;
        Decision solver = solve_bip_diam3(g, sides);
        CHECK(solver.yes);
        ++done;
    }
}

TEST_CASE("four-path structure violations never happen") {
    Rng rng(73);
    std::int64_t violations = 0;
    for (int iter = 0; iter < 150; ++iter) {
        std::vector<std::uint8_t> sides;
        Graph g = random_bipartite_diam_le3(12, rng, &sides);
        Decision d = solve_bip_diam3(g, sides);
        auto it = d.stats.counters.find("four_path_violations");
        if (it != d.stats.counters.end()) violations += it->second;
    }
    CHECK(violations == 0);
}

TEST_CASE("diameter-2 block fallback stays correct") {
    // Petersen-like instances leave unassigned remainders after propagation;
    // the stats expose whether the block branching actually ran.
    Decision d = solve_diam2(petersen_graph());
    CHECK(d.yes);
    CHECK(verify_pmc(petersen_graph(), d.certificate->matching).has_value());
}

TEST_CASE("residual matching shapes, crafted instances") {
    // Each instance pins one structural branch of the guessed-edges pipeline;
    // the oracle confirms the answers and the counters prove the branch ran.
    SUBCASE("two middles sharing both ends (hub doubled)") {
        Graph g(8, {{0, 4}, {5, 1}, {0, 5}, {4, 1}, {0, 6}, {1, 7}, {2, 6}, {2, 7}, {3, 6},
                    {3, 7}});
        std::vector<std::uint8_t> sides{0, 0, 0, 0, 1, 1, 1, 1};
        REQUIRE(diameter_of(g) == 3);
        Decision d = solve_bip_diam3(g, sides);
        CHECK(d.yes);
        CHECK(oracle_pmc(g).yes);
        CHECK(d.stats.counters.at("residual_star_plus1") == 1);
    }
    SUBCASE("one hub, one middle per spoke") {
        Graph g(10, {{0, 5}, {6, 1}, {6, 0}, {5, 1}, {5, 4}, {0, 7}, {0, 8}, {1, 9}, {2, 7},
                     {2, 9}, {3, 8}, {3, 9}, {4, 9}});
        std::vector<std::uint8_t> sides{0, 0, 0, 0, 0, 1, 1, 1, 1, 1};
        REQUIRE(diameter_of(g) == 3);
        Decision d = solve_bip_diam3(g, sides);
        CHECK(d.yes);
        CHECK(oracle_pmc(g).yes);
        CHECK(d.stats.counters.at("residual_star") == 1);
    }
    SUBCASE("two-by-two ends: the four internally disjoint paths") {
        Graph g(16, {{0, 8},  {9, 1},  {0, 9},  {8, 1},  {0, 10}, {0, 11}, {1, 12},
                     {1, 13}, {2, 10}, {2, 12}, {3, 10}, {3, 13}, {4, 11}, {4, 12},
                     {5, 11}, {5, 13}, {8, 6},  {9, 7},  {14, 2}, {14, 5}, {14, 6},
                     {14, 7}, {15, 3}, {15, 4}, {15, 6}, {15, 7}});
        std::vector<std::uint8_t> sides(16, 0);
        for (int v : {8, 9, 10, 11, 12, 13, 14, 15}) sides[v] = 1;
        REQUIRE(diameter_of(g) == 3);
        Decision d = solve_bip_diam3(g, sides);
        CHECK(d.yes);
        CHECK(oracle_pmc(g).yes);
        CHECK(d.stats.counters.at("residual_2x2") == 1);
    }
}

TEST_CASE("diameter-2 oracle fallback under a tiny branch budget") {
    DiameterSolverOptions opts;
    opts.branch_budget = 1;
    Decision d = solve_diam2(petersen_graph(), opts);
    CHECK(d.yes);
    CHECK(d.stats.counters.at("fallback_oracle") == 1);
    CHECK(verify_pmc(petersen_graph(), d.certificate->matching).has_value());
}
