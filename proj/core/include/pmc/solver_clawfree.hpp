#pragma once

#include "pmc/oracle.hpp"

namespace pmc {

/// Immune vertex group grown from a triangle. The core is the set of members
/// with no neighbor outside the cluster; the corona members each carry
/// exactly one link to another cluster.
struct Cluster {
    VertexSet vertices;
    VertexSet core;
    VertexSet corona;
    bool even() const { return core.count() % 2 == 0; }
};

/// Path between two clusters whose interior (at most one vertex after the
/// degree-2 path preprocessing) lies outside every cluster.
struct ClusterLink {
    int from_cluster, to_cluster; // from < to
    int from_vertex, to_vertex;
    int interior = -1; // -1 for a direct edge
};

struct ClusterGraph {
    std::vector<Cluster> clusters;
    std::vector<ClusterLink> links;

    std::vector<int> neighbors_of(int cluster) const; // distinct, ascending
    int cluster_of(int vertex) const; // -1 when in no cluster
};

/// Some induced path a-b-c-d whose middle vertices have degree two, or
/// absent. Deterministic scan order.
std::optional<std::array<int, 4>> find_degree2_p4(const Graph& g);

/// Clusters seeded from every triangle and closed under the two absorption
/// rules (a vertex with two neighbors inside joins; a member with two
/// neighbors outside pulls both in), with links, cores and coronas computed
/// afterwards. Requires connected, claw-free, delta >= 2.
ClusterGraph build_clusters(const Graph& g);

/// Exact decision for connected claw-free graphs.
Decision solve_clawfree(const Graph& g);

/// DOT rendering of the cluster graph (clusters as nodes labeled with their
/// vertex sets and core parity, links as edges), for debugging.
std::string cluster_graph_dot(const ClusterGraph& cg);

} // namespace pmc
