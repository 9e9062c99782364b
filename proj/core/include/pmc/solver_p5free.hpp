#pragma once

#include "pmc/oracle.hpp"

namespace pmc {

/// Connected dominating structure of a P5-free graph: a single vertex, an
/// edge, a larger clique, or an induced three-vertex path (in that order of
/// preference; a clique always wins over a P3 when both exist).
struct Dominator {
    enum class Kind { vertex, edge, clique, p3 };
    Kind kind;
    std::vector<int> vertices; // for p3: in path order
};

/// Exhaustive for sizes 1 and 2; minimum-cardinality dominating clique via
/// maximal-clique enumeration otherwise; induced-P3 scan as the last resort
/// (always succeeds on connected P5-free inputs, else the recognizer lied and
/// this throws InternalInvariantError).
Dominator find_dominating_structure(const Graph& g);

/// Least fixpoint of the two absorption rules: a vertex with two neighbors in
/// X joins X; an adjacent pair outside X with a common X-neighbor joins X.
/// Deterministic by ascending index; idempotent and monotone.
VertexSet procedure_absorb(const Graph& g, VertexSet x0);

/// Exact decision for connected P5-free graphs (n <= 64).
Decision solve_p5free(const Graph& g);

} // namespace pmc
