#include "pmc/solver_p5free.hpp"

#include <algorithm>
#include <functional>

#include "pmc/classify.hpp"

namespace pmc {

namespace {

VertexSet closed_neighborhood(const Graph& g, const std::vector<int>& vs) {
    VertexSet s(g.vertex_count());
    for (int v : vs) {
        s.set(v);
        s |= g.adj(v);
    }
    return s;
}

VertexSet closed_neighborhood_set(const Graph& g, const VertexSet& vs) {
    VertexSet s = vs;
    for (auto v = vs.find_first(); v != VertexSet::npos; v = vs.find_next(v))
        s |= g.adj(static_cast<int>(v));
    return s;
}

bool dominates(const Graph& g, const std::vector<int>& vs) {
    return closed_neighborhood(g, vs).all();
}

// Bron-Kerbosch with pivoting, ascending order.
void maximal_cliques(const Graph& g, VertexSet r, VertexSet p, VertexSet x,
                     std::vector<VertexSet>& out) {
    if (p.none() && x.none()) {
        out.push_back(r);
        return;
    }
    VertexSet px = p | x;
    int pivot = -1;
    std::size_t best = 0;
    for (auto v = px.find_first(); v != VertexSet::npos; v = px.find_next(v)) {
        std::size_t cnt = (g.adj(static_cast<int>(v)) & p).count();
        if (pivot == -1 || cnt > best) {
            pivot = static_cast<int>(v);
            best = cnt;
        }
    }
    VertexSet candidates = p & ~g.adj(pivot);
    for (auto v = candidates.find_first(); v != VertexSet::npos; v = candidates.find_next(v)) {
        VertexSet rv = r;
        rv.set(v);
        maximal_cliques(g, rv, p & g.adj(static_cast<int>(v)), x & g.adj(static_cast<int>(v)),
                        out);
        p.reset(v);
        x.set(v);
    }
}

std::optional<std::vector<int>> min_dominating_clique(const Graph& g) {
    std::vector<VertexSet> cliques;
    maximal_cliques(g, g.empty_set(), g.full_set(), g.empty_set(), cliques);
    std::vector<std::vector<int>> candidates;
    std::size_t largest = 0;
    for (const auto& c : cliques) {
        if (!closed_neighborhood_set(g, c).all()) continue; // subsets dominate even less
        std::vector<int> vs;
        for (auto v = c.find_first(); v != VertexSet::npos; v = c.find_next(v))
            vs.push_back(static_cast<int>(v));
        largest = std::max(largest, vs.size());
        candidates.push_back(std::move(vs));
    }
    if (candidates.empty()) return std::nullopt;
    // Smallest dominating subset over all dominating maximal cliques; sizes 1
    // and 2 were already ruled out by the caller.
    for (std::size_t size = 3; size <= largest; ++size) {
        for (const auto& clique : candidates) {
            if (clique.size() < size) continue;
            std::vector<int> subset;
            std::function<bool(std::size_t)> choose = [&](std::size_t from) {
                if (subset.size() == size) return dominates(g, subset);
                if (clique.size() - from < size - subset.size()) return false;
                for (std::size_t i = from; i < clique.size(); ++i) {
                    subset.push_back(clique[i]);
                    if (choose(i + 1)) return true;
                    subset.pop_back();
                }
                return false;
            };
            if (choose(0)) return subset;
        }
    }
    return std::nullopt;
}

} // namespace

Dominator find_dominating_structure(const Graph& g) {
    int n = g.vertex_count();
    for (int v = 0; v < n; ++v)
        if (dominates(g, {v})) return {Dominator::Kind::vertex, {v}};
    for (auto [u, v] : g.edges())
        if (dominates(g, {u, v})) return {Dominator::Kind::edge, {u, v}};
    if (auto clique = min_dominating_clique(g))
        return {Dominator::Kind::clique, std::move(*clique)};
    for (int b = 0; b < n; ++b) {
        const auto& nbrs = g.neighbors(b);
        for (std::size_t i = 0; i < nbrs.size(); ++i)
            for (std::size_t j = 0; j < nbrs.size(); ++j) {
                if (i == j) continue;
                int a = nbrs[i], c = nbrs[j];
                if (a > c || g.has_edge(a, c)) continue;
                if (dominates(g, {a, b, c})) return {Dominator::Kind::p3, {a, b, c}};
            }
    }
    throw InternalInvariantError(
        "no dominating clique or induced P3; input cannot be connected P5-free");
}

VertexSet procedure_absorb(const Graph& g, VertexSet x) {
    int n = g.vertex_count();
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v = 0; v < n && !changed; ++v) {
            if (x.test(v)) continue;
            if ((g.adj(v) & x).count() >= 2) {
                x.set(v);
                changed = true;
            }
        }
        if (changed) continue;
        for (auto xv = x.find_first(); xv != VertexSet::npos && !changed; xv = x.find_next(xv)) {
            VertexSet outside = g.adj(static_cast<int>(xv)) & ~x;
            for (auto u = outside.find_first(); u != VertexSet::npos && !changed;
                 u = outside.find_next(u)) {
                VertexSet partners = g.adj(static_cast<int>(u)) & outside;
                auto w = partners.find_first();
                if (w != VertexSet::npos) {
                    x.set(u);
                    x.set(w);
                    changed = true;
                }
            }
        }
    }
    return x;
}

namespace {

// Matching that pairs every vertex of `far` with its unique neighbor inside
// `near_anchors`, completed by a perfect matching of the remainder.
std::optional<Matching> cut_and_complete(const Graph& g, const std::vector<Edge>& cut) {
    VertexSet covered(g.vertex_count());
    for (auto [u, v] : cut) {
        if (covered.test(u) || covered.test(v)) return std::nullopt;
        covered.set(u);
        covered.set(v);
    }
    auto rest = pm_on_subset(g, ~covered);
    if (!rest) return std::nullopt;
    std::vector<Edge> pairs = cut;
    pairs.insert(pairs.end(), rest->pairs.begin(), rest->pairs.end());
    return Matching::from_pairs(g, std::move(pairs));
}

// Both "separate one closed neighborhood from the other" endgames share this
// shape: the candidate cut is exactly E(side1, side2) over a fixed bipartition
// of V; it works iff that cut is a nonempty matching and the uncovered rest
// has a perfect matching.
std::optional<Matching> two_sided_cut(const Graph& g, const VertexSet& side1,
                                      const VertexSet& side2) {
    if ((side1 & side2).any()) return std::nullopt;
    if (!(side1 | side2).all()) return std::nullopt;
    std::vector<Edge> cut;
    for (auto [u, v] : g.edges())
        if (side1.test(u) != side1.test(v)) cut.push_back({u, v});
    if (cut.empty()) return std::nullopt;
    return cut_and_complete(g, cut);
}

} // namespace

Decision solve_p5free(const Graph& g) {
    if (!is_connected(g)) throw InputError("solver requires a connected graph");
    if (!is_p5_free(g)) throw WrongSolverError("graph has an induced P5");
    if (g.vertex_count() > 64)
        throw CapExceededError("p5free solver capped at 64 vertices");
    int n = g.vertex_count();
    SolveStats stats;
    if (!max_matching(g).is_perfect_on(g)) {
        stats.bump("no_perfect_matching");
        return make_no_decision("p5free", std::move(stats));
    }
    if (g.min_degree() == 1) {
        // The pendant edge is a bridge contained in every perfect matching.
        stats.bump("leaf_yes");
        return make_yes_decision(g, max_matching(g), "p5free", std::move(stats));
    }

    Dominator dom = find_dominating_structure(g);
    switch (dom.kind) {
        case Dominator::Kind::vertex: {
            // Every vertex lies in a triangle through the dominating vertex,
            // triangles are immune, and all those triangles share it: no cut.
            int k1 = dom.vertices[0];
            for (int v = 0; v < n; ++v) {
                if (v == k1) continue;
                if (!(g.adj(v) & g.adj(k1)).any())
                    throw InternalInvariantError("dominating vertex without triangle cover");
            }
            stats.bump("dominating_vertex_no");
            return make_no_decision("p5free", std::move(stats));
        }
        case Dominator::Kind::edge: {
            int k1 = dom.vertices[0], k2 = dom.vertices[1];
            // Strategy one: both endpoints on the same side of the cut.
            VertexSet x0(n);
            x0.set(k1);
            x0.set(k2);
            VertexSet x = procedure_absorb(g, x0);
            if (!x.all()) {
                VertexSet rest = ~x;
                if (!is_connected_subset(g, rest))
                    throw InternalInvariantError("remainder splits despite P5-freeness");
                if (rest.count() == 2) {
                    int r1 = static_cast<int>(rest.find_first());
                    int r2 = static_cast<int>(rest.find_next(r1));
                    bool r1_k1 = g.has_edge(r1, k1);
                    int w1 = r1_k1 ? k1 : k2, w2 = r1_k1 ? k2 : k1;
                    if (g.has_edge(r1, r2) && g.has_edge(r1, w1) && g.has_edge(r2, w2)) {
                        if (auto m = cut_and_complete(g, {make_edge(r1, w1), make_edge(r2, w2)}))
                            return make_yes_decision(g, *m, "p5free", std::move(stats));
                    }
                }
            }
            // Strategy two: the cut separates the two endpoints.
            VertexSet x1 = g.adj(k1), x2 = g.adj(k2);
            x1.set(k1);
            x2.set(k2);
            x1.reset(k2);
            x2.reset(k1);
            if (auto m = two_sided_cut(g, x1, x2))
                return make_yes_decision(g, *m, "p5free", std::move(stats));
            return make_no_decision("p5free", std::move(stats));
        }
        case Dominator::Kind::clique: {
            VertexSet x0(n);
            for (int v : dom.vertices) x0.set(v);
            VertexSet x = procedure_absorb(g, x0);
            if (x.all()) {
                stats.bump("absorbed_everything");
                return make_no_decision("p5free", std::move(stats));
            }
            VertexSet rest = ~x;
            if (!is_connected_subset(g, rest))
                throw InternalInvariantError("remainder splits despite P5-freeness");
            // Every remainder vertex must ride its unique clique edge across
            // the cut; a shared anchor would need two matching edges.
            std::vector<Edge> cut;
            VertexSet anchors(n);
            bool feasible = true;
            for (auto r = rest.find_first(); r != VertexSet::npos && feasible;
                 r = rest.find_next(r)) {
                VertexSet in_x = g.adj(static_cast<int>(r)) & x;
                if (in_x.count() != 1)
                    throw InternalInvariantError("remainder vertex with several anchors");
                int k = static_cast<int>(in_x.find_first());
                if (!x0.test(k))
                    throw InternalInvariantError("anchor escaped the dominating clique");
                if (anchors.test(k)) {
                    feasible = false;
                    break;
                }
                anchors.set(k);
                cut.push_back(make_edge(static_cast<int>(r), k));
            }
            if (feasible) {
                if (auto m = cut_and_complete(g, cut))
                    return make_yes_decision(g, *m, "p5free", std::move(stats));
            }
            return make_no_decision("p5free", std::move(stats));
        }
        case Dominator::Kind::p3: {
            int a = dom.vertices[0], b = dom.vertices[1], c = dom.vertices[2];
            // All three on the same side.
            VertexSet x0(n);
            for (int v : dom.vertices) x0.set(v);
            VertexSet x = procedure_absorb(g, x0);
            if (!x.all()) {
                VertexSet rest = ~x;
                if (!is_connected_subset(g, rest))
                    throw InternalInvariantError("remainder splits despite P5-freeness");
                std::vector<Edge> cut;
                VertexSet anchors(n);
                bool feasible = rest.count() <= 3;
                for (auto r = rest.find_first(); r != VertexSet::npos && feasible;
                     r = rest.find_next(r)) {
                    VertexSet in_x = g.adj(static_cast<int>(r)) & x;
                    if (in_x.count() != 1)
                        throw InternalInvariantError("remainder vertex with several anchors");
                    int w = static_cast<int>(in_x.find_first());
                    if (anchors.test(w)) {
                        feasible = false;
                        break;
                    }
                    anchors.set(w);
                    cut.push_back(make_edge(static_cast<int>(r), w));
                }
                if (feasible) {
                    if (auto m = cut_and_complete(g, cut))
                        return make_yes_decision(g, *m, "p5free", std::move(stats));
                }
            }
            // Path endpoint split off, both orientations.
            for (auto [far, keep] : {std::pair{c, a}, std::pair{a, c}}) {
                VertexSet x1 = g.adj(far);
                x1.set(far);
                x1.reset(b);
                VertexSet x2 = g.adj(keep) | g.adj(b);
                x2.set(keep);
                x2.set(b);
                x2.reset(far);
                if (auto m = two_sided_cut(g, x1, x2))
                    return make_yes_decision(g, *m, "p5free", std::move(stats));
            }
            return make_no_decision("p5free", std::move(stats));
        }
    }
    throw InternalInvariantError("unreachable dominator kind");
}

} // namespace pmc
