#pragma once

#include <optional>
#include <vector>

#include "pmc/graph.hpp"

namespace pmc {

struct Matching {
    std::vector<Edge> pairs; // canonical (u < v), sorted
    VertexSet covered;

    static Matching from_pairs(const Graph& g, std::vector<Edge> pairs);
    bool is_perfect_on(const Graph& g) const {
        return static_cast<int>(covered.count()) == g.vertex_count();
    }
    int size() const { return static_cast<int>(pairs.size()); }
    /// Matched partner of v, or -1.
    int partner(int v) const;
};

/// Maximum matching by Edmonds' blossom algorithm. Deterministic under the
/// canonical vertex order (greedy seeding and augmentation both scan
/// ascending indices), so certificates built from it are reproducible.
Matching max_matching(const Graph& g);

/// Hopcroft-Karp. `sides` must be a proper two-coloring of g (throws
/// InputError otherwise); agrees in size with max_matching.
Matching bipartite_max_matching(const Graph& g, const std::vector<std::uint8_t>& sides);

/// A perfect matching of g containing e, if one exists: maximum matching of
/// g minus e's endpoints, checked for perfection there.
std::optional<Matching> perfect_matching_through(const Graph& g, Edge e);

/// Perfect matching of G[w], mapped back to g's labels. Absent whenever |w|
/// is odd.
std::optional<Matching> pm_on_subset(const Graph& g, const VertexSet& w);

} // namespace pmc
