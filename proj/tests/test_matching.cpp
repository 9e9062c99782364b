#include "doctest.h"

#include "pmc/classify.hpp"
#include "pmc/generators.hpp"
#include "pmc/matching.hpp"
#include "support/test_support.hpp"

using namespace pmc;
namespace tt = pmc::testing;

TEST_CASE("maximum matching on fixed instances") {
    CHECK(max_matching(cycle_graph(6)).size() == 3);
    CHECK(max_matching(star_graph(3)).size() == 1);
    // Brute force says the Petersen graph's maximum matching has 5 edges.
    CHECK(tt::brute_max_matching(petersen_graph()) == 5);
    CHECK(max_matching(petersen_graph()).size() == 5);
    CHECK(max_matching(petersen_graph()).is_perfect_on(petersen_graph()));
}

TEST_CASE("maximum matching equals brute force on random graphs") {
    Rng rng(3);
    for (int iter = 0; iter < 200; ++iter) {
        int n = std::uniform_int_distribution<int>(0, 10)(rng);
        Graph g = gnp(n, 0.35, rng);
        CHECK(max_matching(g).size() == tt::brute_max_matching(g));
    }
}

TEST_CASE("blossom handles odd cycles") {
    // C5 with a chord plus a pendant: forces contraction paths.
    Graph g(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 2}, {2, 5}});
    CHECK(max_matching(g).size() == tt::brute_max_matching(g));
}

TEST_CASE("deterministic output") {
    Rng rng(5);
    Graph g = gnp(9, 0.5, rng);
    auto a = max_matching(g);
    auto b = max_matching(g);
    CHECK(a.pairs == b.pairs);
}

TEST_CASE("bipartite maximum matching") {
    std::vector<std::uint8_t> sides33{0, 0, 0, 1, 1, 1};
    CHECK(bipartite_max_matching(complete_bipartite(3, 3), sides33).size() == 3);

    std::vector<std::uint8_t> sides_c6{0, 1, 0, 1, 0, 1};
    CHECK(bipartite_max_matching(cycle_graph(6), sides_c6).size() == 3);

    std::vector<std::uint8_t> sides_p5{0, 1, 0, 1, 0};
    CHECK(bipartite_max_matching(path_graph(5), sides_p5).size() == 2);

    std::vector<std::uint8_t> bad{0, 0, 0, 1, 1, 1};
    CHECK_THROWS_AS(bipartite_max_matching(cycle_graph(6), bad), InputError);

    Rng rng(23);
    for (int iter = 0; iter < 100; ++iter) {
        int na = std::uniform_int_distribution<int>(1, 7)(rng);
        int nb = std::uniform_int_distribution<int>(1, 7)(rng);
        Graph g = random_bipartite(na, nb, 0.5, rng);
        std::vector<std::uint8_t> sides(na + nb, 0);
        for (int v = na; v < na + nb; ++v) sides[v] = 1;
        CHECK(bipartite_max_matching(g, sides).size() == max_matching(g).size());
    }
}

TEST_CASE("perfect matching through an edge") {
    Graph p4 = path_graph(4);
    auto through_ab = perfect_matching_through(p4, {0, 1});
    REQUIRE(through_ab.has_value());
    CHECK(through_ab->pairs == std::vector<Edge>{{0, 1}, {2, 3}});
    CHECK_FALSE(perfect_matching_through(p4, {1, 2}).has_value()); // isolates the ends

    // Every perfect matching of the prism that contains a rung, by
    // enumeration: the rung lies in two of the four perfect matchings.
    Graph prism = prism_graph();
    auto pms = tt::all_perfect_matchings(prism);
    CHECK(pms.size() == 4);
    Edge rung{0, 3};
    int with_rung = 0;
    for (const auto& pm : pms)
        if (std::find(pm.begin(), pm.end(), rung) != pm.end()) ++with_rung;
    CHECK(with_rung == 2);
    auto through = perfect_matching_through(prism, rung);
    REQUIRE(through.has_value());
    CHECK(through->is_perfect_on(prism));
    CHECK(std::find(through->pairs.begin(), through->pairs.end(), rung) != through->pairs.end());

    CHECK_THROWS_AS(perfect_matching_through(p4, {0, 3}), InputError);
}

TEST_CASE("perfect matching on a subset") {
    Graph c6 = cycle_graph(6);
    CHECK(pm_on_subset(c6, VertexSet(6))->size() == 0);

    VertexSet run(6);
    for (int v = 0; v < 4; ++v) run.set(v);
    auto m = pm_on_subset(c6, run);
    REQUIRE(m.has_value());
    CHECK(m->pairs == std::vector<Edge>{{0, 1}, {2, 3}});

    VertexSet odd(4);
    odd.set(0);
    odd.set(1);
    odd.set(2);
    CHECK_FALSE(pm_on_subset(complete_graph(4), odd).has_value());
}

TEST_CASE("connected claw-free graphs of even order have perfect matchings") {
    Rng rng(29);
    int done = 0;
    while (done < 500) {
        int n = 2 * std::uniform_int_distribution<int>(2, 6)(rng);
        Graph g = random_clawfree(n, rng);
        if (g.vertex_count() % 2 != 0) continue;
        CAPTURE(serialize(g, GraphFormat::graph6));
        CHECK(max_matching(g).is_perfect_on(g));
        ++done;
    }
}

TEST_CASE("matching validation") {
    Graph c4 = cycle_graph(4);
    CHECK_THROWS_AS(Matching::from_pairs(c4, {{0, 2}}), InputError);        // not an edge
    CHECK_THROWS_AS(Matching::from_pairs(c4, {{0, 1}, {1, 2}}), InputError); // shared vertex
}
