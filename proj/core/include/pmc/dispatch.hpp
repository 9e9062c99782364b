#pragma once

#include <optional>
#include <string>

#include "pmc/classify.hpp"
#include "pmc/oracle.hpp"
#include "pmc/treewidth.hpp"

namespace pmc {

enum class SolverChoice { automatic, diam2, bipdiam3, p5free, clawfree, treewidth, cubic, oracle };

struct SolveRequest {
    SolverChoice solver = SolverChoice::automatic;
    std::optional<TreeDecomposition> td;
    bool assume_planar = false;
    int oracle_cap = 26;
    int oracle_threads = 1;
    int width_cap = 10;     // heuristic decompositions wider than this are not used
    int branch_budget = 1 << 10;
};

struct SolveOutcome {
    Decision decision;
    ClassReport report;
};

/// Early yes/no when cheaply decidable: no perfect matching (no); a degree-1
/// vertex plus a perfect matching (yes, the pendant edge is a bridge of the
/// matching); a bridge lying in some perfect matching (yes). Throws
/// InputError on disconnected input.
std::optional<Decision> preprocess(const Graph& g);

/// Planar cubic rule: K4 is the lone exception; otherwise a planar cubic
/// graph has a perfect matching-cut iff it has a perfect matching. Planarity
/// must be asserted by the caller or verified at desk scale; refuses
/// otherwise (the rule fails on nonplanar cubic graphs).
Decision solve_cubic(const Graph& g, bool planar_assert, const SolveRequest& req = {});

/// Auto order: preprocess; diameter <= 2; bipartite diameter <= 3; planar
/// cubic; claw-free; P5-free; treewidth (supplied or heuristic within the
/// width cap); oracle within its cap; otherwise UnsupportedClassError.
SolveOutcome dispatch(const Graph& g, const SolveRequest& req);

} // namespace pmc
