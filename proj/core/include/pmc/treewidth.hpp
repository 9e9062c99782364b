#pragma once

#include "pmc/oracle.hpp"

namespace pmc {

struct TreeDecomposition {
    std::vector<VertexSet> bags;
    std::vector<std::pair<int, int>> tree_edges; // bag indices

    int width() const;
};

/// PACE .td format: comment lines 'c ...', header 's td <bags> <max-bag-size>
/// <n>', bag lines 'b <id> <v...>' (1-indexed ids and vertices), then one
/// '<i> <j>' bag-tree edge per line.
TreeDecomposition parse_td(std::string_view text);

/// Throws InputError naming the violated property: vertex/edge coverage, the
/// per-vertex subtree condition, or a disconnected/cyclic bag tree.
void validate_td(const Graph& g, const TreeDecomposition& td);

/// Min-fill elimination ordering; width is an upper bound on the true
/// treewidth.
TreeDecomposition heuristic_td(const Graph& g);

/// Exact decision by dynamic programming over an internally normalized nice
/// decomposition (introduce/forget/join plus explicit edge-introduce nodes).
/// Cross-side edges are mandatory matching edges; a certificate is recovered
/// by backtrace on yes.
Decision solve_tw(const Graph& g, const TreeDecomposition& td);

} // namespace pmc
