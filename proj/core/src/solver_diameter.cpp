#include "pmc/solver_diameter.hpp"

#include <algorithm>

#include "pmc/classify.hpp"

namespace pmc {

namespace {

std::vector<VertexSet> unassigned_blocks(const Graph& g, const PartialCut& pc) {
    int n = g.vertex_count();
    VertexSet pending(n);
    for (int v = 0; v < n; ++v)
        if (!pc.is_assigned(v)) pending.set(v);
    std::vector<VertexSet> blocks;
    while (pending.any()) {
        auto start = pending.find_first();
        VertexSet block(n);
        block.set(start);
        std::vector<int> stack{static_cast<int>(start)};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            VertexSet next = g.adj(v) & pending & ~block;
            for (auto w = next.find_first(); w != VertexSet::npos; w = next.find_next(w)) {
                block.set(w);
                stack.push_back(static_cast<int>(w));
            }
        }
        pending -= block;
        blocks.push_back(std::move(block));
    }
    return blocks;
}

std::optional<PmcCertificate> settle(const Graph& g, PartialCut pc) {
    pc = propagate(g, pc);
    if (pc.contradiction || !pc.fully_assigned()) return std::nullopt;
    return complete_to_pmc(g, pc);
}

} // namespace

Decision solve_diam2(const Graph& g, const DiameterSolverOptions& opts) {
    if (!is_connected(g)) throw InputError("solver requires a connected graph");
    if (diameter_of(g) > 2) throw WrongSolverError("diameter exceeds 2");
    SolveStats stats;
    if (!max_matching(g).is_perfect_on(g)) {
        stats.bump("no_perfect_matching");
        return make_no_decision("diam2", std::move(stats));
    }

    for (auto edge : g.edges()) {
        for (int orientation = 0; orientation < 2; ++orientation) {
            int x = orientation == 0 ? edge.first : edge.second;
            int y = orientation == 0 ? edge.second : edge.first;
            stats.bump("guesses");
            PartialCut pc = PartialCut::open(g.vertex_count());
            pc.assign(x, Side::x);
            pc.assign(y, Side::y);
            pc.commit(x, y);
            pc = propagate(g, pc);
            if (pc.contradiction) {
                stats.bump("contradictions");
                continue;
            }
            if (pc.fully_assigned()) {
                if (auto cert = complete_to_pmc(g, pc))
                    return make_yes_decision(g, cert->matching, "diam2", std::move(stats));
                continue;
            }
            auto blocks = unassigned_blocks(g, pc);
            if (blocks.size() >= 31 ||
                (1 << blocks.size()) > opts.branch_budget) {
                // Branching would blow the budget; the exhaustive decider
                // settles the whole instance.
                stats.bump("fallback_oracle");
                Decision d = oracle_pmc(g, opts.oracle);
                d.solver_id = "diam2";
                for (auto& [k, v] : stats.counters) d.stats.counters[k] += v;
                return d;
            }
            stats.bump("fallback_blocks");
            for (unsigned mask = 0; mask < (1u << blocks.size()); ++mask) {
                PartialCut branch = pc;
                for (std::size_t b = 0; b < blocks.size(); ++b) {
                    Side s = (mask >> b) & 1 ? Side::y : Side::x;
                    const auto& block = blocks[b];
                    for (auto v = block.find_first(); v != VertexSet::npos;
                         v = block.find_next(v))
                        branch.assign(static_cast<int>(v), s);
                }
                if (auto cert = settle(g, std::move(branch)))
                    return make_yes_decision(g, cert->matching, "diam2", std::move(stats));
            }
        }
    }
    return make_no_decision("diam2", std::move(stats));
}

namespace {

// One guessed pair of cut edges ab, cd with a, d on one side of the
// bipartition and b, c on the other; a, c go to X and b, d to Y.
struct CaseFrame {
    int a, b, c, d;
    VertexSet set_a, set_b, set_c, set_d, set_s, set_t;
};

std::optional<CaseFrame> build_frame(const Graph& g, const std::vector<std::uint8_t>& sides,
                                     int a, int b, int c, int d, SolveStats& stats) {
    int n = g.vertex_count();
    CaseFrame f;
    f.a = a;
    f.b = b;
    f.c = c;
    f.d = d;
    VertexSet guessed(n);
    for (int v : {a, b, c, d}) guessed.set(v);

    // A vertex outside the guessed four that neighbors both endpoints of a
    // committed edge's side pair would be forced onto both sides at once.
    if (((g.adj(a) & g.adj(d)) & ~guessed).any()) {
        stats.bump("reject_common_neighbor");
        return std::nullopt;
    }
    if (((g.adj(b) & g.adj(c)) & ~guessed).any()) {
        stats.bump("reject_common_neighbor");
        return std::nullopt;
    }

    f.set_a = g.adj(a) & ~guessed;
    f.set_b = g.adj(b) & ~guessed;
    f.set_c = g.adj(c) & ~guessed;
    f.set_d = g.adj(d) & ~guessed;

    VertexSet near = f.set_a | f.set_b | f.set_c | f.set_d | guessed;
    f.set_s = VertexSet(n);
    f.set_t = VertexSet(n);
    for (int v = 0; v < n; ++v) {
        if (near.test(v)) continue;
        if (sides[v] == sides[a]) {
            if ((g.adj(v) & f.set_a).any() && (g.adj(v) & f.set_d).any())
                f.set_s.set(v);
        } else {
            if ((g.adj(v) & f.set_b).any() && (g.adj(v) & f.set_c).any())
                f.set_t.set(v);
        }
    }
    // The seven pieces must tile the vertex set (diameter <= 3 guarantees
    // same-side vertices share a neighbor, which pins every leftover vertex).
    VertexSet all = near | f.set_s | f.set_t;
    if (!all.all()) {
        stats.bump("reject_partition");
        return std::nullopt;
    }
    return f;
}

// (middle vertex, end vertex) pair chosen into the matching; the middle
// vertex then lands on the side opposite its end.
using Pick = std::pair<int, int>;

// The matchings of the residual structure at one side of the frame. Every
// surviving middle vertex has exactly one neighbor in each end set and must
// be matched into one of them; counting (mu middles into alpha + delta ends,
// with every end pair sharing a middle) leaves only the shapes enumerated
// here. Returns nullopt when the counts cannot support any matching, which
// rejects the guess.
std::optional<std::vector<std::vector<Pick>>> enumerate_residual_matchings(
    const Graph& g, const PartialCut& pc, const std::vector<int>& middle,
    const VertexSet& end_one, const VertexSet& end_two, SolveStats& stats) {
    std::vector<std::vector<Pick>> out;
    if (middle.empty()) {
        stats.bump("residual_empty");
        out.emplace_back();
        return out;
    }
    struct Ends {
        int one, two;
    };
    std::vector<Ends> ends(middle.size());
    std::vector<int> ones, twos; // distinct end vertices, ascending
    for (std::size_t i = 0; i < middle.size(); ++i) {
        int s = middle[i];
        VertexSet in_one = g.adj(s) & end_one;
        VertexSet in_two = g.adj(s) & end_two;
        if (in_one.count() != 1 || in_two.count() != 1) {
            stats.bump("reject_structure");
            return std::nullopt;
        }
        ends[i] = {static_cast<int>(in_one.find_first()), static_cast<int>(in_two.find_first())};
        // A committed end would already have absorbed s onto its own side.
        if (pc.committed_partner[ends[i].one] != -1 || pc.committed_partner[ends[i].two] != -1) {
            stats.bump("reject_structure");
            return std::nullopt;
        }
        ones.push_back(ends[i].one);
        twos.push_back(ends[i].two);
    }
    auto dedupe = [](std::vector<int>& v) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
    };
    dedupe(ones);
    dedupe(twos);

    // Normalize so the larger end set plays the "alpha" role.
    bool swapped = ones.size() < twos.size();
    if (swapped) {
        std::swap(ones, twos);
        for (auto& e : ends) std::swap(e.one, e.two);
    }
    std::size_t mu = middle.size(), alpha = ones.size(), delta = twos.size();
    if (mu > alpha + delta || mu < alpha * delta) {
        stats.bump("reject_count_infeasible");
        return std::nullopt;
    }

    if (alpha == 2 && delta == 2) {
        // mu == 4 by the bounds: four disjoint two-edge paths, giving the two
        // alternating perfect matchings of the induced eight-cycle.
        int slot[2][2] = {{-1, -1}, {-1, -1}};
        for (std::size_t i = 0; i < mu; ++i) {
            int r = ends[i].one == ones[0] ? 0 : 1;
            int col = ends[i].two == twos[0] ? 0 : 1;
            if (slot[r][col] != -1) {
                stats.bump("four_path_violations");
                return std::nullopt;
            }
            slot[r][col] = static_cast<int>(i);
        }
        stats.bump("residual_2x2");
        auto pick = [&](int i, bool toward_one) {
            return Pick{middle[i], toward_one ? ends[i].one : ends[i].two};
        };
        out.push_back({pick(slot[0][0], true), pick(slot[0][1], false), pick(slot[1][0], false),
                       pick(slot[1][1], true)});
        out.push_back({pick(slot[0][0], false), pick(slot[0][1], true), pick(slot[1][0], true),
                       pick(slot[1][1], false)});
        return out;
    }
    if (delta == 1) {
        if (mu == alpha) {
            stats.bump("residual_star");
            // Star paths end-to-end; either nobody uses the hub or exactly
            // one middle does.
            std::vector<Pick> all_to_one;
            for (std::size_t i = 0; i < mu; ++i) all_to_one.push_back({middle[i], ends[i].one});
            out.push_back(all_to_one);
            for (std::size_t i = 0; i < mu; ++i) {
                auto variant = all_to_one;
                variant[i] = {middle[i], ends[i].two};
                out.push_back(std::move(variant));
            }
            return out;
        }
        if (mu == alpha + 1) {
            // Exactly one end vertex serves two middles.
            int doubled = -1, first = -1, second = -1;
            for (std::size_t i = 0; i < mu; ++i) {
                for (std::size_t j = i + 1; j < mu; ++j) {
                    if (ends[i].one != ends[j].one) continue;
                    if (doubled != -1) {
                        stats.bump("reject_structure");
                        return std::nullopt;
                    }
                    doubled = ends[i].one;
                    first = static_cast<int>(i);
                    second = static_cast<int>(j);
                }
            }
            if (doubled == -1) {
                stats.bump("reject_structure");
                return std::nullopt;
            }
            stats.bump("residual_star_plus1");
            std::vector<Pick> base;
            for (std::size_t i = 0; i < mu; ++i)
                if (static_cast<int>(i) != first && static_cast<int>(i) != second)
                    base.push_back({middle[i], ends[i].one});
            auto variant = base;
            variant.push_back({middle[first], ends[first].one});
            variant.push_back({middle[second], ends[second].two});
            out.push_back(std::move(variant));
            variant = base;
            variant.push_back({middle[first], ends[first].two});
            variant.push_back({middle[second], ends[second].one});
            out.push_back(std::move(variant));
            return out;
        }
        stats.bump("reject_count_infeasible");
        return std::nullopt;
    }
    stats.bump("reject_count_infeasible");
    return std::nullopt;
}

} // namespace

Decision solve_bip_diam3(const Graph& g, const std::vector<std::uint8_t>& sides,
                         const DiameterSolverOptions& opts) {
    (void)opts;
    if (!is_connected(g)) throw InputError("solver requires a connected graph");
    if (static_cast<int>(sides.size()) != g.vertex_count())
        throw InputError("coloring size mismatch");
    for (auto [u, v] : g.edges())
        if (sides[u] == sides[v]) {
            if (two_coloring(g)) throw InputError("supplied coloring is not proper");
            throw WrongSolverError("graph is not bipartite");
        }
    if (diameter_of(g) > 3) throw WrongSolverError("diameter exceeds 3");

    SolveStats stats;
    if (!bipartite_max_matching(g, sides).is_perfect_on(g)) {
        stats.bump("no_perfect_matching");
        return make_no_decision("bipdiam3", std::move(stats));
    }
    // Single-edge cuts are exactly the bridge case.
    for (auto bridge : find_bridges(g)) {
        if (auto m = perfect_matching_through(g, bridge)) {
            stats.bump("bridge_yes");
            return make_yes_decision(g, *m, "bipdiam3", std::move(stats));
        }
    }
    // From here on delta(G) >= 2: a degree-1 vertex's pendant edge is a
    // bridge lying in every perfect matching, so it was handled above.
    if (g.min_degree() < 2)
        throw InternalInvariantError("leaf survived bridge preprocessing");

    const auto& edges = g.edges();
    int m = g.edge_count();
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            if (i == j) continue;
            auto e1 = edges[i], e2 = edges[j];
            int a = sides[e1.first] == 0 ? e1.first : e1.second;
            int b = e1.first == a ? e1.second : e1.first;
            int d = sides[e2.first] == 0 ? e2.first : e2.second;
            int c = e2.first == d ? e2.second : e2.first;
            if (a == d || b == c) continue; // edges of one matching never meet
            stats.bump("guesses");

            auto frame = build_frame(g, sides, a, b, c, d, stats);
            if (!frame) continue;

            PartialCut pc = PartialCut::open(g.vertex_count());
            pc.assign(a, Side::x);
            pc.assign(b, Side::y);
            pc.assign(c, Side::x);
            pc.assign(d, Side::y);
            pc.commit(a, b);
            pc.commit(c, d);
            pc = propagate(g, pc);
            if (pc.contradiction) {
                stats.bump("reject_contradiction");
                continue;
            }

            // Residuals: the unassigned survivors of S and T.
            std::vector<int> res_s, res_t;
            bool stray = false;
            for (int v = 0; v < g.vertex_count(); ++v) {
                if (pc.is_assigned(v)) continue;
                if (frame->set_s.test(v))
                    res_s.push_back(v);
                else if (frame->set_t.test(v))
                    res_t.push_back(v);
                else
                    stray = true;
            }
            if (stray) {
                stats.bump("reject_structure");
                continue;
            }
            auto ms = enumerate_residual_matchings(g, pc, res_s, frame->set_a, frame->set_d,
                                                   stats);
            if (!ms) continue;
            auto mt = enumerate_residual_matchings(g, pc, res_t, frame->set_b, frame->set_c,
                                                   stats);
            if (!mt) continue;
            for (const auto& choice_s : *ms) {
                for (const auto& choice_t : *mt) {
                    stats.bump("combinations");
                    PartialCut combo = pc;
                    auto apply = [&](const std::vector<Edge>& choice) {
                        for (auto [mid, end] : choice) {
                            combo.assign(mid, opposite(combo.side[end]));
                            if (combo.contradiction) return;
                            combo.commit(mid, end);
                            if (combo.contradiction) return;
                        }
                    };
                    apply(choice_s);
                    if (!combo.contradiction) apply(choice_t);
                    if (combo.contradiction) continue;
                    combo = propagate(g, combo);
                    if (combo.contradiction || !combo.fully_assigned()) continue;
                    if (auto cert = complete_to_pmc(g, combo))
                        return make_yes_decision(g, cert->matching, "bipdiam3",
                                                 std::move(stats));
                }
            }
        }
    }
    return make_no_decision("bipdiam3", std::move(stats));
}

} // namespace pmc
