#pragma once

#include <iosfwd>

#include "pmc/certificate.hpp"

namespace pmc {

enum class Side : std::uint8_t { unassigned, x, y };

inline Side opposite(Side s) { return s == Side::x ? Side::y : Side::x; }

/// Workspace for growing a matching-cut partition: per-vertex side, the cut
/// edges already forced into the matching, and a terminal contradiction flag.
/// Every committed edge has one endpoint on each side and no vertex carries
/// two committed edges.
struct PartialCut {
    std::vector<Side> side;
    std::vector<Edge> committed;
    std::vector<int> committed_partner; // -1 when uncommitted
    bool contradiction = false;
    std::size_t absorbed = 0; // committed edges whose neighborhoods were folded

    static PartialCut open(int n);

    bool is_assigned(int v) const { return side[v] != Side::unassigned; }
    bool fully_assigned() const;

    /// Conflicting reassignment flips status to contradiction.
    void assign(int v, Side s);

    /// Requires both endpoints assigned to opposite sides. A second committed
    /// edge at either endpoint is a contradiction.
    void commit(int u, int v);

    bool operator==(const PartialCut&) const = default;
};

/// Least fixpoint of the forcing rules, applied in priority order over
/// ascending vertex indices:
///   - a vertex adjacent to both endpoints of a committed edge: contradiction;
///   - a committed edge absorbs each endpoint's remaining neighborhood onto
///     that endpoint's side;
///   - an X-vertex adjacent to a Y-vertex commits that edge;
///   - an unassigned vertex with two neighbors on one side joins that side.
/// Idempotent; the assigned and committed sets only grow. Pass a stream to
/// trace each rule firing.
PartialCut propagate(const Graph& g, PartialCut pc, std::ostream* trace = nullptr);

/// For a fully assigned open cut: checks E(X,Y) is a nonempty matching equal
/// to the committed set, then completes with a perfect matching of the
/// vertices the cut leaves uncovered. Throws InternalInvariantError if some
/// vertex is unassigned (caller bug), InputError if pc is contradicted.
std::optional<PmcCertificate> complete_to_pmc(const Graph& g, const PartialCut& pc);

} // namespace pmc
