#pragma once

#include <limits>
#include <optional>
#include <vector>

#include "pmc/graph.hpp"

namespace pmc {

/// Sentinel for diam(G) of a disconnected graph and g(G) of a forest.
constexpr int kInfinity = std::numeric_limits<int>::max();

enum class PlanarHint { verified_planar, verified_nonplanar, unknown };

struct ClassReport {
    bool connected = false;
    std::optional<std::vector<std::uint8_t>> bipartition; // present iff bipartite
    int diameter = kInfinity;                             // kInfinity iff disconnected
    int girth = kInfinity;                                // kInfinity iff acyclic
    int min_degree = 0;
    int max_degree = 0;
    bool claw_free = false;
    bool p5_free = false;
    bool cubic = false;
    std::vector<Edge> bridges;
    PlanarHint planar_hint = PlanarHint::unknown;
};

ClassReport classify(const Graph& g);

// The individual recognizers, also used directly by the solvers.

std::vector<int> bfs_distances(const Graph& g, int source);
bool is_connected(const Graph& g);
/// Connectivity of G[s]; the empty set counts as connected.
bool is_connected_subset(const Graph& g, const VertexSet& s);
int diameter_of(const Graph& g);
int girth_of(const Graph& g);
std::optional<std::vector<std::uint8_t>> two_coloring(const Graph& g);
std::vector<Edge> find_bridges(const Graph& g);
bool is_claw_free(const Graph& g);
bool is_p5_free(const Graph& g);
bool is_cubic(const Graph& g);

/// Exhaustive search for a K5 or K3,3 subdivision, budget-bounded; returns
/// unknown for graphs with more than 30 vertices or when the budget runs out.
PlanarHint planar_hint_of(const Graph& g);

} // namespace pmc
