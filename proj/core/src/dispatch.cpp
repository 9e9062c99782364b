#include "pmc/dispatch.hpp"

#include "pmc/solver_clawfree.hpp"
#include "pmc/solver_diameter.hpp"
#include "pmc/solver_p5free.hpp"

namespace pmc {

std::optional<Decision> preprocess(const Graph& g) {
    if (!is_connected(g)) throw InputError("the problem is defined on connected graphs");
    SolveStats stats;
    Matching mm = max_matching(g);
    if (!mm.is_perfect_on(g)) {
        stats.bump("no_perfect_matching");
        return make_no_decision("preprocess", std::move(stats));
    }
    if (g.vertex_count() >= 2 && g.min_degree() == 1) {
        stats.bump("leaf_rule");
        return make_yes_decision(g, mm, "preprocess", std::move(stats));
    }
    for (auto bridge : find_bridges(g)) {
        if (auto through = perfect_matching_through(g, bridge)) {
            stats.bump("bridge_rule");
            return make_yes_decision(g, *through, "preprocess", std::move(stats));
        }
    }
    return std::nullopt;
}

Decision solve_cubic(const Graph& g, bool planar_assert, const SolveRequest& req) {
    if (!is_connected(g)) throw InputError("solver requires a connected graph");
    if (!is_cubic(g)) throw WrongSolverError("graph is not cubic");
    SolveStats stats;
    if (g.vertex_count() == 4) {
        // K4: the one planar cubic graph with a perfect matching but no
        // perfect matching-cut.
        stats.bump("k4_no");
        return make_no_decision("cubic", std::move(stats));
    }
    if (!planar_assert) {
        switch (planar_hint_of(g)) {
            case PlanarHint::verified_planar:
                break;
            case PlanarHint::verified_nonplanar:
                throw WrongSolverError("graph is cubic but not planar; the rule does not apply");
            case PlanarHint::unknown:
                throw UnsupportedClassError(
                    "planarity unverified at this size; pass the planar assertion flag");
        }
    }
    Matching mm = max_matching(g);
    if (!mm.is_perfect_on(g)) {
        stats.bump("no_perfect_matching");
        return make_no_decision("cubic", std::move(stats));
    }
    // Witness: every perfect matching of a cubic graph contains every bridge.
    auto bridges = find_bridges(g);
    if (!bridges.empty()) {
        auto through = perfect_matching_through(g, bridges.front());
        if (!through)
            throw InternalInvariantError("cubic graph with a perfect matching but none through "
                                         "a bridge");
        stats.bump("bridge_witness");
        return make_yes_decision(g, *through, "cubic", std::move(stats));
    }
    if (g.vertex_count() <= req.oracle_cap) {
        OracleOptions opts{req.oracle_cap, req.oracle_threads};
        Decision d = oracle_pmc(g, opts);
        if (!d.yes)
            throw InternalInvariantError("planar cubic bridgeless graph reported no despite "
                                         "the classification");
        d.solver_id = "cubic";
        d.stats.bump("oracle_witness");
        return d;
    }
    // Beyond the cap the answer stands without a certificate.
    Decision d;
    d.yes = true;
    d.solver_id = "cubic";
    d.stats = std::move(stats);
    d.stats.bump("certificate_unavailable");
    return d;
}

SolveOutcome dispatch(const Graph& g, const SolveRequest& req) {
    SolveOutcome out;
    out.report = classify(g);
    const ClassReport& r = out.report;
    if (!r.connected) throw InputError("the problem is defined on connected graphs");

    auto finish = [&](Decision d) {
        if (d.yes && d.certificate) {
            if (!verify_pmc(g, d.certificate->matching))
                throw InternalInvariantError("emitted certificate failed re-verification");
        }
        out.decision = std::move(d);
        return out;
    };

    DiameterSolverOptions dopts;
    dopts.branch_budget = req.branch_budget;
    dopts.oracle = OracleOptions{req.oracle_cap, req.oracle_threads};

    switch (req.solver) {
        case SolverChoice::diam2:
            return finish(solve_diam2(g, dopts));
        case SolverChoice::bipdiam3:
            if (!r.bipartition) throw WrongSolverError("graph is not bipartite");
            return finish(solve_bip_diam3(g, *r.bipartition, dopts));
        case SolverChoice::p5free:
            return finish(solve_p5free(g));
        case SolverChoice::clawfree:
            return finish(solve_clawfree(g));
        case SolverChoice::cubic:
            return finish(solve_cubic(g, req.assume_planar, req));
        case SolverChoice::treewidth: {
            TreeDecomposition td = req.td ? *req.td : heuristic_td(g);
            return finish(solve_tw(g, td));
        }
        case SolverChoice::oracle:
            return finish(oracle_pmc(g, OracleOptions{req.oracle_cap, req.oracle_threads}));
        case SolverChoice::automatic:
            break;
    }

    if (auto early = preprocess(g)) return finish(std::move(*early));
    if (r.diameter <= 2) return finish(solve_diam2(g, dopts));
    if (r.bipartition && r.diameter <= 3)
        return finish(solve_bip_diam3(g, *r.bipartition, dopts));
    bool planar_ok = req.assume_planar || r.planar_hint == PlanarHint::verified_planar;
    if (r.cubic && planar_ok) return finish(solve_cubic(g, req.assume_planar, req));
    if (r.claw_free) return finish(solve_clawfree(g));
    if (r.p5_free && g.vertex_count() <= 64) return finish(solve_p5free(g));
    if (req.td) return finish(solve_tw(g, *req.td));
    {
        TreeDecomposition td = heuristic_td(g);
        if (td.width() <= req.width_cap) return finish(solve_tw(g, td));
    }
    if (g.vertex_count() <= req.oracle_cap)
        return finish(oracle_pmc(g, OracleOptions{req.oracle_cap, req.oracle_threads}));
    throw UnsupportedClassError("no solver applies: not in a recognized class, no usable "
                                "decomposition, and past the oracle cap");
}

} // namespace pmc
