#include "doctest.h"

#include "pmc/dispatch.hpp"
#include "pmc/generators.hpp"
#include "support/test_support.hpp"

using namespace pmc;

TEST_CASE("preprocessing rules") {
    auto p4 = preprocess(path_graph(4));
    REQUIRE(p4.has_value());
    CHECK(p4->yes);
    CHECK(p4->stats.counters.count("leaf_rule"));
    CHECK(p4->certificate->matching.pairs == std::vector<Edge>{{0, 1}, {2, 3}});

    // Two triangles joined by a bridge.
    Graph bowtie(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}});
    auto bridge = preprocess(bowtie);
    REQUIRE(bridge.has_value());
    CHECK(bridge->yes);
    CHECK(bridge->stats.counters.count("bridge_rule"));

    auto c5 = preprocess(cycle_graph(5));
    REQUIRE(c5.has_value());
    CHECK_FALSE(c5->yes); // odd, no perfect matching

    CHECK_FALSE(preprocess(cycle_graph(6)).has_value()); // nothing early to say

    Graph split(4, {{0, 1}, {2, 3}});
    CHECK_THROWS_AS(preprocess(split), InputError);
}

TEST_CASE("cubic rule") {
    CHECK_FALSE(solve_cubic(complete_graph(4), false).yes);

    Decision prism = solve_cubic(prism_graph(), false);
    CHECK(prism.yes);
    CHECK(prism.certificate.has_value());

    CHECK(solve_cubic(cube_graph(), false).yes);

    // K3,3 is cubic but not planar: refused without the assertion flag.
    CHECK_THROWS_AS(solve_cubic(complete_bipartite(3, 3), false), WrongSolverError);
    CHECK_THROWS_AS(solve_cubic(path_graph(4), false), WrongSolverError);

    // The Petersen graph is cubic and nonplanar too.
    CHECK_THROWS_AS(solve_cubic(petersen_graph(), false), WrongSolverError);

    // A cubic graph with a bridge gets its witness through the bridge.
    Rng rng(131);
    Graph bridged = random_cubic_with_bridge(rng);
    if (max_matching(bridged).is_perfect_on(bridged)) {
        Decision d = solve_cubic(bridged, true);
        CHECK(d.yes);
        CHECK(d.stats.counters.count("bridge_witness"));
    }
}

TEST_CASE("auto dispatch routes by class") {
    SolveRequest req;

    SolveOutcome c4 = dispatch(cycle_graph(4), req);
    CHECK(c4.decision.yes);
    CHECK(c4.decision.solver_id == "diam2");

    // The prism is cubic, claw-free and P5-free, but its diameter is 2 and
    // the diameter solver comes first in the fixed order.
    SolveOutcome prism = dispatch(prism_graph(), req);
    CHECK(prism.decision.yes);
    CHECK(prism.decision.solver_id == "diam2");

    // Claw-free routing fires when the earlier classes do not apply.
    {
        Rng rng(211);
        bool found = false;
        for (int iter = 0; iter < 500 && !found; ++iter) {
            Graph g = random_clawfree(10, rng);
            ClassReport r = classify(g);
            if (r.diameter <= 2 || r.bipartition || (r.cubic && !r.bridges.empty())) continue;
            if (r.cubic && r.planar_hint == PlanarHint::verified_planar) continue;
            if (preprocess(g)) continue;
            SolveOutcome routed = dispatch(g, req);
            CHECK(routed.decision.solver_id == "clawfree");
            found = true;
        }
        CHECK(found);
    }

    SolveOutcome c6 = dispatch(cycle_graph(6), req);
    CHECK(c6.decision.yes);
    CHECK(c6.decision.solver_id == "bipdiam3");

    SolveOutcome pete = dispatch(petersen_graph(), req);
    CHECK(pete.decision.yes);
    CHECK(pete.decision.solver_id == "diam2");

    // Forced solver choice is honored.
    req.solver = SolverChoice::oracle;
    CHECK(dispatch(cycle_graph(6), req).decision.solver_id == "oracle");
    req.solver = SolverChoice::treewidth;
    CHECK(dispatch(cycle_graph(6), req).decision.solver_id == "treewidth");
}

TEST_CASE("every applicable solver answers alike") {
    Rng rng(137);
    int done = 0;
    while (done < 80) {
        int n = std::uniform_int_distribution<int>(2, 10)(rng);
        Graph g = random_connected(n, 0.5, rng);
        Decision truth = oracle_pmc(g);
        ClassReport r = classify(g);
        SolveRequest req;
        CAPTURE(serialize(g, GraphFormat::graph6));
        if (r.diameter <= 2) {
            req.solver = SolverChoice::diam2;
            CHECK(dispatch(g, req).decision.yes == truth.yes);
        }
        if (r.bipartition && r.diameter <= 3) {
            req.solver = SolverChoice::bipdiam3;
            CHECK(dispatch(g, req).decision.yes == truth.yes);
        }
        if (r.claw_free) {
            req.solver = SolverChoice::clawfree;
            CHECK(dispatch(g, req).decision.yes == truth.yes);
        }
        if (r.p5_free) {
            req.solver = SolverChoice::p5free;
            CHECK(dispatch(g, req).decision.yes == truth.yes);
        }
        req.solver = SolverChoice::treewidth;
        CHECK(dispatch(g, req).decision.yes == truth.yes);
        ++done;
    }
}

TEST_CASE("unsupported class error") {
    // Disconnected input fails earlier with an input error.
    Rng rng(139);
    // A largish random graph in no easy class, over a tiny oracle cap and
    // with a tiny width cap.
    Graph g = random_connected(30, 0.3, rng);
    while (is_claw_free(g) || is_p5_free(g) || diameter_of(g) <= 3)
        g = random_connected(30, 0.3, rng);
    SolveRequest req;
    req.oracle_cap = 10;
    req.width_cap = 2;
    bool early = preprocess(g).has_value();
    if (!early) CHECK_THROWS_AS(dispatch(g, req), UnsupportedClassError);
}
