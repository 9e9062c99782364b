#pragma once

#include <map>

#include "pmc/certificate.hpp"

namespace pmc {

enum class ReductionKind { diam3, bipdiam4 };

/// Instance map for the two hardness constructions. Both blow a source on n
/// vertices up to 2n(n+1) target vertices: two copies of the source, one
/// associated block of n vertices per copy vertex (a clique in the diam3
/// construction, an independent set in the bipartite one), and exactly one
/// deterministic connector edge per block pair.
struct ReductionMap {
    Graph source;
    Graph target;
    ReductionKind kind;
    std::vector<std::uint8_t> source_sides; // bipdiam4 only

    int copy_vertex(int copy, int i) const; // copy in {1, 2}
    int block_vertex(int copy, int i, int j) const;
    std::pair<int, int> block_range(int copy, int i) const; // [begin, end)

    /// The two connector edges selected for a source pair {i, j}.
    struct PairEdges {
        Edge first, second;
    };
    const PairEdges& pair_edges(int i, int j) const;

    std::map<std::pair<int, int>, PairEdges> connectors;
};

/// Diameter-3 target: copies keep the source edges; each copy vertex gets an
/// associated n-clique; within a copy every clique pair is joined by exactly
/// one edge with per-clique-distinct endpoints; matching blocks of the two
/// copies are completed into 2n-cliques seen by both copy vertices. Diameter
/// verified equal to 3 at build time. Requires connected source, n >= 2.
ReductionMap reduce_diam3(const Graph& g);

/// Bipartite diameter-4 target from a connected bipartite source of diameter
/// exactly 3; associated blocks are independent sets, matching blocks form
/// K_{n,n}, and the inter-block connectors form a matching. Bipartiteness and
/// diameter 4 verified at build time.
ReductionMap reduce_bipdiam4(const Graph& g, const std::vector<std::uint8_t>& sides);

/// Exact-cut partition of a matching-cut: sides such that E(X,Y) equals the
/// given edge set. Throws InputError when the edges are not a matching-cut.
std::vector<std::uint8_t> matching_cut_partition(const Graph& g, const std::vector<Edge>& cut);

/// Lifts a verified matching-cut of the source to a verifier-accepted perfect
/// matching-cut certificate of the target.
PmcCertificate lift_certificate(const ReductionMap& rm, const std::vector<Edge>& source_cut);

/// Reverse direction: restricts a target certificate to copy-1 source edges
/// and returns the matching-cut of the source induced by a component split.
std::vector<Edge> project_certificate(const ReductionMap& rm, const PmcCertificate& cert);

} // namespace pmc
