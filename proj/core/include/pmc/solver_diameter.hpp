#pragma once

#include "pmc/oracle.hpp"
#include "pmc/propagation.hpp"

namespace pmc {

struct DiameterSolverOptions {
    int branch_budget = 1 << 10; // assignments tried on unassigned blocks
    OracleOptions oracle;        // fallback when the budget is blown
};

/// Exact decision for connected graphs of diameter at most 2. For each
/// ordered edge (x, y): seed x in X, y in Y, commit xy, propagate; complete
/// when fully assigned, otherwise branch the connected blocks of unassigned
/// vertices two ways each (complete for this class: an unassigned vertex
/// keeps exactly one assigned neighbor on each side, so adjacent unassigned
/// vertices can never straddle the cut). Fallbacks are counted in stats.
Decision solve_diam2(const Graph& g, const DiameterSolverOptions& opts = {});

/// Exact decision for connected bipartite graphs of diameter at most 3,
/// following the two-guessed-cut-edges pipeline; every structural rejection
/// is a named stats counter.
Decision solve_bip_diam3(const Graph& g, const std::vector<std::uint8_t>& sides,
                         const DiameterSolverOptions& opts = {});

} // namespace pmc
