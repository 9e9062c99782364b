#pragma once

#include "pmc/certificate.hpp"

namespace pmc {

struct OracleOptions {
    int cap = 26;    // refuse larger instances
    int threads = 1; // data-parallel sweep over assignment prefixes
};

/// Checks whether m is a perfect matching whose removal disconnects g, and if
/// so returns the certificate with partition = the component of g - m
/// containing vertex 0. Throws InputError when m is not a matching of g at
/// all (distinct from a valid matching that is no perfect matching-cut).
std::optional<PmcCertificate> verify_pmc(const Graph& g, const Matching& m);

/// Ground-truth decider: sweeps the 2^(n-1) partitions with vertex 0 pinned
/// to X (realized as a DFS over side assignments so that subtrees die as soon
/// as some vertex collects two cut edges), keeps those whose cut is a
/// nonempty matching, and accepts iff the uncovered remainder has a perfect
/// matching. Requires g connected and n <= cap.
Decision oracle_pmc(const Graph& g, const OracleOptions& opts = {});

/// Same sweep without the perfect-matching completion step.
Decision oracle_matching_cut(const Graph& g, const OracleOptions& opts = {});

/// A matching-cut found by the sweep: the cut edges and the X side.
struct MatchingCutWitness {
    std::vector<Edge> cut;
    VertexSet side_x;
};

std::optional<MatchingCutWitness> find_matching_cut(const Graph& g,
                                                    const OracleOptions& opts = {});

/// True iff G[s] has no matching-cut. Requires G[s] connected and |s| <= cap.
bool is_immune(const Graph& g, const VertexSet& s, const OracleOptions& opts = {});

/// Wraps a verified yes; throws InternalInvariantError if the matching fails
/// verification, so a buggy solver can never report an unverified yes.
Decision make_yes_decision(const Graph& g, const Matching& m, std::string solver_id,
                           SolveStats stats = {});

Decision make_no_decision(std::string solver_id, SolveStats stats = {});

} // namespace pmc
