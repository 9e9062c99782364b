#include "doctest.h"

#include <algorithm>

#include "pmc/classify.hpp"
#include "pmc/generators.hpp"
#include "pmc/graph.hpp"
#include "support/test_support.hpp"

using namespace pmc;
namespace tt = pmc::testing;

TEST_CASE("edge list parsing") {
    Graph g = parse_graph("pmc 3 2\n0 1\n1 2\n");
    CHECK(g.vertex_count() == 3);
    CHECK(g.edges() == std::vector<Edge>{{0, 1}, {1, 2}});

    CHECK(parse_graph("# a comment\npmc 2 1\n1 0\n").has_edge(0, 1));

    CHECK_THROWS_AS(parse_graph("pmc 2 1\n0 0\n"), ParseError); // self-loop
    CHECK_THROWS_AS(parse_graph("pmc 2 1\n0 5\n"), ParseError); // out of range
    CHECK_THROWS_AS(parse_graph("pmc 2 2\n0 1\n1 0\n"), ParseError); // duplicate
    CHECK_THROWS_AS(parse_graph("mpc 2 1\n0 1\n"), ParseError); // bad header
    CHECK_THROWS_AS(parse_graph("pmc 2 2\n0 1\n"), ParseError); // count mismatch
    CHECK_THROWS_AS(parse_graph(""), ParseError);

    CHECK_THROWS_WITH_AS(parse_graph("pmc 2 1\n0 0\n"), "line 2: self-loop", ParseError);
}

TEST_CASE("graph6 matches an independent decoder") {
    CHECK(parse_graph("C~") == complete_graph(4));
    CHECK(serialize(complete_graph(4), GraphFormat::graph6) == "C~");

    Rng rng(7);
    for (int iter = 0; iter < 200; ++iter) {
        int n = std::uniform_int_distribution<int>(0, 20)(rng);
        Graph g = gnp(n, 0.4, rng);
        std::string s6 = serialize(g, GraphFormat::graph6);
        auto [rn, redges] = tt::reference_graph6(s6);
        std::sort(redges.begin(), redges.end());
        CHECK(rn == n);
        CHECK(redges == g.edges());
        CHECK(parse_graph6(s6) == g);
    }
}

TEST_CASE("graph6 long form") {
    Graph g = path_graph(80);
    std::string s6 = serialize(g, GraphFormat::graph6);
    CHECK(s6[0] == '~');
    CHECK(parse_graph6(s6) == g);
}

TEST_CASE("round-trips across formats") {
    Rng rng(42);
    for (int iter = 0; iter < 100; ++iter) {
        int n = std::uniform_int_distribution<int>(1, 20)(rng);
        Graph g = gnp(n, 0.3, rng);
        CHECK(parse_graph(serialize(g, GraphFormat::edgelist)) == g);
        CHECK(parse_graph(serialize(g, GraphFormat::graph6)) == g);
    }
}

TEST_CASE("dot output shape") {
    std::string dot = serialize(path_graph(3), GraphFormat::dot);
    CHECK(dot.find("graph g {") != std::string::npos);
    CHECK(dot.find("0 -- 1;") != std::string::npos);
    CHECK(dot.find("1 -- 2;") != std::string::npos);
}

TEST_CASE("induced subgraphs") {
    Graph k4 = complete_graph(4);
    VertexSet s(4);
    s.set(0);
    s.set(1);
    s.set(2);
    auto [tri, map3] = induced(k4, s);
    CHECK(tri == complete_graph(3));
    CHECK(map3 == std::vector<int>{0, 1, 2});

    // Five consecutive cycle vertices induce a path: ends are non-adjacent.
    Graph c6 = cycle_graph(6);
    VertexSet t(6);
    for (int v = 0; v < 5; ++v) t.set(v);
    auto [p5, map5] = induced(c6, t);
    CHECK(p5 == path_graph(5));

    auto [empty, emap] = induced(c6, VertexSet(6));
    CHECK(empty.vertex_count() == 0);
    CHECK(emap.empty());
}

TEST_CASE("classify fixed instances") {
    ClassReport k4 = classify(complete_graph(4));
    CHECK(k4.diameter == 1);
    CHECK(k4.girth == 3);
    CHECK(k4.claw_free);
    CHECK(k4.bridges.empty());
    CHECK(k4.planar_hint == PlanarHint::verified_planar);

    ClassReport c6 = classify(cycle_graph(6));
    CHECK(c6.diameter == 3);
    CHECK(c6.girth == 6);
    CHECK(c6.bipartition.has_value());
    CHECK_FALSE(c6.p5_free);

    ClassReport claw = classify(star_graph(3));
    CHECK_FALSE(claw.claw_free);
    CHECK(claw.bridges.size() == 3);

    ClassReport pete = classify(petersen_graph());
    CHECK(pete.diameter == 2);
    CHECK(pete.girth == 5);
    CHECK(pete.cubic);
    CHECK(pete.planar_hint == PlanarHint::verified_nonplanar);

    CHECK(classify(cube_graph()).planar_hint == PlanarHint::verified_planar);
    CHECK(classify(complete_graph(5)).planar_hint == PlanarHint::verified_nonplanar);
    CHECK(classify(complete_bipartite(3, 3)).planar_hint == PlanarHint::verified_nonplanar);

    Graph two_parts(4, {{0, 1}, {2, 3}});
    ClassReport disc = classify(two_parts);
    CHECK_FALSE(disc.connected);
    CHECK(disc.diameter == kInfinity);
    CHECK(disc.girth == kInfinity);
}

TEST_CASE("even cycles: diameter k, girth 2k") {
    for (int k = 2; k <= 8; ++k) {
        ClassReport r = classify(cycle_graph(2 * k));
        CHECK(r.diameter == k);
        CHECK(r.girth == 2 * k);
    }
}

TEST_CASE("claw-freeness against brute force") {
    Rng rng(11);
    for (int iter = 0; iter < 150; ++iter) {
        int n = std::uniform_int_distribution<int>(1, 12)(rng);
        Graph g = gnp(n, 0.35, rng);
        CHECK(is_claw_free(g) == !tt::brute_has_claw(g));
    }
}

TEST_CASE("p5-freeness against brute force") {
    Rng rng(13);
    for (int iter = 0; iter < 100; ++iter) {
        int n = std::uniform_int_distribution<int>(1, 10)(rng);
        Graph g = gnp(n, 0.4, rng);
        CHECK(is_p5_free(g) == !tt::brute_has_induced_p5(g));
    }
}

TEST_CASE("bridges against brute force") {
    Rng rng(17);
    for (int iter = 0; iter < 150; ++iter) {
        int n = std::uniform_int_distribution<int>(2, 12)(rng);
        Graph g = gnp(n, 0.25, rng);
        CHECK(find_bridges(g) == tt::brute_bridges(g));
    }
}

TEST_CASE("graph construction validation") {
    CHECK_THROWS_AS(Graph(2, {{0, 0}}), InputError);
    CHECK_THROWS_AS(Graph(2, {{0, 1}, {1, 0}}), InputError);
    CHECK_THROWS_AS(Graph(2, {{0, 2}}), InputError);
}
