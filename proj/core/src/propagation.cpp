#include "pmc/propagation.hpp"

#include <algorithm>
#include <ostream>

namespace pmc {

PartialCut PartialCut::open(int n) {
    PartialCut pc;
    pc.side.assign(n, Side::unassigned);
    pc.committed_partner.assign(n, -1);
    return pc;
}

bool PartialCut::fully_assigned() const {
    return std::none_of(side.begin(), side.end(),
                        [](Side s) { return s == Side::unassigned; });
}

void PartialCut::assign(int v, Side s) {
    if (contradiction || s == Side::unassigned) return;
    if (side[v] == s) return;
    if (side[v] != Side::unassigned) {
        contradiction = true;
        return;
    }
    side[v] = s;
}

void PartialCut::commit(int u, int v) {
    if (contradiction) return;
    if (side[u] == Side::unassigned || side[v] != opposite(side[u]))
        throw InternalInvariantError("commit requires endpoints on opposite sides");
    if (committed_partner[u] == v) return;
    if (committed_partner[u] != -1 || committed_partner[v] != -1) {
        contradiction = true; // second matching edge at a vertex
        return;
    }
    committed_partner[u] = v;
    committed_partner[v] = u;
    committed.push_back(make_edge(u, v));
}

PartialCut propagate(const Graph& g, PartialCut pc, std::ostream* trace) {
    int n = g.vertex_count();
    while (!pc.contradiction) {
        // Committed edges first: the common-neighborhood contradiction, then
        // folding both neighborhoods.
        if (pc.absorbed < pc.committed.size()) {
            auto [u, v] = pc.committed[pc.absorbed++];
            if ((g.adj(u) & g.adj(v)).any()) {
                // Such a vertex would need matching edges to both u and v.
                if (trace)
                    *trace << "contradiction: common neighbor of committed " << u << '-' << v
                           << '\n';
                pc.contradiction = true;
                break;
            }
            if (trace) *trace << "absorb neighborhoods of committed " << u << '-' << v << '\n';
            for (int w : g.neighbors(u))
                if (w != v) pc.assign(w, pc.side[u]);
            for (int w : g.neighbors(v))
                if (w != u) pc.assign(w, pc.side[v]);
            continue;
        }
        // First cross edge not yet committed.
        int cu = -1, cv = -1;
        for (int u = 0; u < n && cu == -1; ++u) {
            if (pc.side[u] != Side::x) continue;
            for (int w : g.neighbors(u)) {
                if (pc.side[w] == Side::y && pc.committed_partner[u] != w) {
                    cu = u;
                    cv = w;
                    break;
                }
            }
        }
        if (cu != -1) {
            if (trace) *trace << "commit cross edge " << cu << '-' << cv << '\n';
            pc.commit(cu, cv);
            continue;
        }
        // First unassigned vertex with two neighbors on one side.
        bool fired = false;
        for (int v = 0; v < n && !fired; ++v) {
            if (pc.side[v] != Side::unassigned) continue;
            int in_x = 0, in_y = 0;
            for (int w : g.neighbors(v)) {
                if (pc.side[w] == Side::x) ++in_x;
                if (pc.side[w] == Side::y) ++in_y;
            }
            if (in_x >= 2) {
                if (trace) *trace << "assign " << v << " to X (two X neighbors)\n";
                pc.assign(v, Side::x);
                fired = true;
            } else if (in_y >= 2) {
                if (trace) *trace << "assign " << v << " to Y (two Y neighbors)\n";
                pc.assign(v, Side::y);
                fired = true;
            }
        }
        if (!fired) break;
    }
    return pc;
}

std::optional<PmcCertificate> complete_to_pmc(const Graph& g, const PartialCut& pc) {
    if (pc.contradiction) throw InputError("complete_to_pmc on a contradicted cut");
    if (!pc.fully_assigned())
        throw InternalInvariantError("complete_to_pmc with unassigned vertices");

    std::vector<Edge> cut;
    for (auto [u, v] : g.edges())
        if (pc.side[u] != pc.side[v]) cut.push_back({u, v});
    std::vector<Edge> committed = pc.committed;
    std::sort(committed.begin(), committed.end());
    if (cut.empty() || cut != committed) return std::nullopt;

    int n = g.vertex_count();
    VertexSet side_x(n), uncovered(n);
    for (int v = 0; v < n; ++v) {
        if (pc.side[v] == Side::x) side_x.set(v);
        if (pc.committed_partner[v] == -1) uncovered.set(v);
    }
    if (side_x.none() || side_x.all()) return std::nullopt;

    auto completion = pm_on_subset(g, uncovered);
    if (!completion) return std::nullopt;
    std::vector<Edge> pairs = cut;
    pairs.insert(pairs.end(), completion->pairs.begin(), completion->pairs.end());
    return PmcCertificate{Matching::from_pairs(g, std::move(pairs)), std::move(side_x)};
}

} // namespace pmc
