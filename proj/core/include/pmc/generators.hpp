#pragma once

#include <random>

#include "pmc/graph.hpp"

namespace pmc {

using Rng = std::mt19937_64;

// Named families.
Graph cycle_graph(int k);
Graph path_graph(int k);
Graph complete_graph(int k);
Graph complete_bipartite(int a, int b);
Graph star_graph(int leaves);
Graph prism_graph();
Graph cube_graph();
Graph petersen_graph();
/// K_{k,k} minus a perfect matching; bipartite of diameter 3 for k >= 3.
Graph knn_minus_pm(int k);
/// Vertices are g's edges; adjacency is sharing an endpoint (always claw-free).
Graph line_graph(const Graph& g);

// Random instances.
Graph random_tree(int n, Rng& rng);
Graph gnp(int n, double p, Rng& rng);
Graph random_connected(int n, double p, Rng& rng);
Graph random_bipartite(int na, int nb, double p, Rng& rng);

// Rejection samplers into the solver classes; they retry until the predicate
// holds, so keep n at desk scale.
Graph random_connected_diam2(int n, Rng& rng);
Graph random_bipartite_diam_le3(int n, Rng& rng, std::vector<std::uint8_t>* sides = nullptr);
Graph random_bipartite_diam_exactly3(int n, Rng& rng,
                                     std::vector<std::uint8_t>* sides = nullptr);
Graph random_p5free(int n, Rng& rng);
Graph random_clawfree(int n, Rng& rng);

/// Cubic graph with at least one bridge: two cubic halves, each a small cubic
/// graph with one edge subdivided, joined by the bridge between the two new
/// vertices. 10 <= n <= 14 depending on the halves chosen.
Graph random_cubic_with_bridge(Rng& rng);

} // namespace pmc
