#include "pmc/solver_clawfree.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "pmc/classify.hpp"

namespace pmc {

std::vector<int> ClusterGraph::neighbors_of(int cluster) const {
    std::vector<int> out;
    for (const auto& link : links) {
        if (link.from_cluster == cluster) out.push_back(link.to_cluster);
        if (link.to_cluster == cluster) out.push_back(link.from_cluster);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

int ClusterGraph::cluster_of(int vertex) const {
    for (std::size_t i = 0; i < clusters.size(); ++i)
        if (clusters[i].vertices.test(vertex)) return static_cast<int>(i);
    return -1;
}

std::optional<std::array<int, 4>> find_degree2_p4(const Graph& g) {
    for (auto [b, c] : g.edges()) {
        if (g.degree(b) != 2 || g.degree(c) != 2) continue;
        const auto& nb = g.neighbors(b);
        const auto& nc = g.neighbors(c);
        int a = nb[0] == c ? nb[1] : nb[0];
        int d = nc[0] == b ? nc[1] : nc[0];
        if (a == d) continue;            // triangle hanging on b-c
        if (g.has_edge(a, d)) continue;  // four-cycle, path not induced
        return std::array<int, 4>{a, b, c, d};
    }
    return std::nullopt;
}

namespace {

// Grows `grow` to closure under the two absorption rules, merging in any
// existing cluster it touches. cluster_id holds current memberships.
void close_cluster(const Graph& g, VertexSet& grow, std::vector<int>& cluster_id,
                   std::vector<VertexSet>& clusters) {
    int n = g.vertex_count();
    auto absorb = [&](int v) {
        if (grow.test(v)) return;
        grow.set(v);
        if (cluster_id[v] >= 0) {
            grow |= clusters[cluster_id[v]];
        }
    };
    // Merge in clusters touched by the seed itself.
    VertexSet seed = grow;
    for (auto v = seed.find_first(); v != VertexSet::npos; v = seed.find_next(v))
        if (cluster_id[v] >= 0) grow |= clusters[cluster_id[v]];
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v = 0; v < n && !changed; ++v) {
            if (grow.test(v)) continue;
            if ((g.adj(v) & grow).count() >= 2) {
                absorb(v);
                changed = true;
            }
        }
        if (changed) continue;
        for (auto v = grow.find_first(); v != VertexSet::npos && !changed;
             v = grow.find_next(v)) {
            VertexSet outside = g.adj(static_cast<int>(v)) & ~grow;
            if (outside.count() >= 2) {
                auto s = outside.find_first();
                auto t = outside.find_next(s);
                absorb(static_cast<int>(s));
                absorb(static_cast<int>(t));
                changed = true;
            }
        }
    }
}

ClusterGraph analyze(const Graph& g, std::vector<VertexSet> sets) {
    int n = g.vertex_count();
    ClusterGraph cg;
    if (sets.empty()) return cg; // triangle-free input, nothing to analyze
    std::vector<int> cluster_id(n, -1);
    for (std::size_t i = 0; i < sets.size(); ++i)
        for (auto v = sets[i].find_first(); v != VertexSet::npos; v = sets[i].find_next(v)) {
            if (cluster_id[v] != -1) throw InternalInvariantError("clusters overlap");
            cluster_id[v] = static_cast<int>(i);
        }

    for (std::size_t i = 0; i < sets.size(); ++i) {
        Cluster c;
        c.vertices = sets[i];
        c.core = VertexSet(n);
        c.corona = VertexSet(n);
        cg.clusters.push_back(std::move(c));
    }

    // Links: direct edges between clusters, and two-edge paths through a
    // vertex lying in no cluster. Interiors longer than one vertex cannot
    // survive the degree-2 path preprocessing.
    for (auto [u, v] : g.edges()) {
        int cu = cluster_id[u], cv = cluster_id[v];
        if (cu == -1 || cv == -1) continue;
        if (cu == cv) continue;
        ClusterLink link;
        link.from_cluster = std::min(cu, cv);
        link.to_cluster = std::max(cu, cv);
        link.from_vertex = cu < cv ? u : v;
        link.to_vertex = cu < cv ? v : u;
        cg.links.push_back(link);
    }
    for (int w = 0; w < n; ++w) {
        if (cluster_id[w] != -1) continue;
        if (g.degree(w) != 2)
            throw InternalInvariantError("vertex outside all clusters has degree != 2");
        int u = g.neighbors(w)[0], v = g.neighbors(w)[1];
        int cu = cluster_id[u], cv = cluster_id[v];
        if (cu == -1 || cv == -1)
            throw InternalInvariantError("link interior longer than one vertex");
        if (cu == cv) throw InternalInvariantError("link returns to its own cluster");
        ClusterLink link;
        link.from_cluster = std::min(cu, cv);
        link.to_cluster = std::max(cu, cv);
        link.from_vertex = cu < cv ? u : v;
        link.to_vertex = cu < cv ? v : u;
        link.interior = w;
        cg.links.push_back(link);
    }

    // Cores and coronas; a corona vertex is the extremity of exactly one link.
    std::vector<int> link_count(n, 0);
    for (const auto& link : cg.links) {
        ++link_count[link.from_vertex];
        ++link_count[link.to_vertex];
    }
    for (auto& c : cg.clusters) {
        for (auto v = c.vertices.find_first(); v != VertexSet::npos;
             v = c.vertices.find_next(v)) {
            if (link_count[v] == 0)
                c.core.set(v);
            else if (link_count[v] == 1)
                c.corona.set(v);
            else
                throw InternalInvariantError("two links share an extremity");
        }
    }
    return cg;
}

std::vector<VertexSet> seed_clusters(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> cluster_id(n, -1);
    std::vector<VertexSet> clusters;
    for (auto [u, v] : g.edges()) {
        VertexSet common = g.adj(u) & g.adj(v);
        for (auto w = common.find_first(); w != VertexSet::npos; w = common.find_next(w)) {
            if (static_cast<int>(w) <= v) continue; // canonical u < v < w
            int cu = cluster_id[u], cv = cluster_id[v], cw = cluster_id[w];
            if (cu != -1 && cu == cv && cv == cw) continue; // already inside one cluster
            VertexSet grow(n);
            grow.set(u);
            grow.set(v);
            grow.set(w);
            close_cluster(g, grow, cluster_id, clusters);
            // Retire swallowed clusters, register the new one.
            std::vector<VertexSet> kept;
            for (auto& c : clusters)
                if (!c.is_subset_of(grow)) kept.push_back(std::move(c));
            kept.push_back(grow);
            clusters = std::move(kept);
            std::fill(cluster_id.begin(), cluster_id.end(), -1);
            for (std::size_t i = 0; i < clusters.size(); ++i)
                for (auto x = clusters[i].find_first(); x != VertexSet::npos;
                     x = clusters[i].find_next(x))
                    cluster_id[x] = static_cast<int>(i);
        }
    }
    return clusters;
}

} // namespace

ClusterGraph build_clusters(const Graph& g) {
    if (!is_claw_free(g)) throw WrongSolverError("graph has an induced claw");
    return analyze(g, seed_clusters(g));
}

namespace {

std::optional<Matching> require_pm(const Graph& g, const VertexSet& s, const char* what) {
    auto m = pm_on_subset(g, s);
    if (!m && s.any())
        throw InternalInvariantError(std::string("expected perfect matching missing: ") + what);
    if (!m) return Matching::from_pairs(g, {});
    return m;
}

// Merges two clusters plus the interiors of the links between them (those
// interiors now have both neighbors inside and can no longer lie on a link
// between distinct clusters), then re-closes under the absorption rules.
std::vector<VertexSet> merge_clusters(const Graph& g, const ClusterGraph& cg, int i, int j) {
    int n = g.vertex_count();
    VertexSet merged = cg.clusters[i].vertices | cg.clusters[j].vertices;
    int lo = std::min(i, j), hi = std::max(i, j);
    for (const auto& link : cg.links)
        if (link.from_cluster == lo && link.to_cluster == hi && link.interior != -1)
            merged.set(link.interior);
    std::vector<VertexSet> others;
    for (std::size_t k = 0; k < cg.clusters.size(); ++k)
        if (static_cast<int>(k) != i && static_cast<int>(k) != j)
            others.push_back(cg.clusters[k].vertices);
    std::vector<int> cluster_id(n, -1);
    for (std::size_t k = 0; k < others.size(); ++k)
        for (auto v = others[k].find_first(); v != VertexSet::npos; v = others[k].find_next(v))
            cluster_id[v] = static_cast<int>(k);
    close_cluster(g, merged, cluster_id, others);
    std::vector<VertexSet> kept;
    for (auto& s : others)
        if (!s.is_subset_of(merged)) kept.push_back(std::move(s));
    kept.push_back(std::move(merged));
    return kept;
}

// Witness for a separable even cluster: match each corona vertex to its
// unique outside neighbor, the core internally, and everything beyond the
// closed neighborhood internally.
Matching even_cluster_witness(const Graph& g, const ClusterGraph& cg, const Cluster& c) {
    int n = g.vertex_count();
    std::vector<Edge> pairs;
    VertexSet outside_partners(n);
    for (auto q = c.corona.find_first(); q != VertexSet::npos; q = c.corona.find_next(q)) {
        VertexSet out = g.adj(static_cast<int>(q)) & ~c.vertices;
        if (out.count() != 1)
            throw InternalInvariantError("corona vertex without unique outside neighbor");
        int w = static_cast<int>(out.find_first());
        outside_partners.set(w);
        pairs.push_back(make_edge(static_cast<int>(q), w));
    }
    // Sumner: connected claw-free graphs of even order have perfect matchings,
    // so both remainders below must match up.
    auto core_pm = require_pm(g, c.core, "cluster core");
    VertexSet rest = ~c.vertices & ~outside_partners;
    if (!is_connected_subset(g, rest))
        throw InternalInvariantError("complement of closed neighborhood disconnected");
    auto rest_pm = require_pm(g, rest, "complement of closed neighborhood");
    pairs.insert(pairs.end(), core_pm->pairs.begin(), core_pm->pairs.end());
    pairs.insert(pairs.end(), rest_pm->pairs.begin(), rest_pm->pairs.end());
    (void)cg;
    return Matching::from_pairs(g, std::move(pairs));
}

} // namespace

Decision solve_clawfree(const Graph& g) {
    if (!is_connected(g)) throw InputError("solver requires a connected graph");
    if (!is_claw_free(g)) throw WrongSolverError("graph has an induced claw");
    SolveStats stats;
    if (!max_matching(g).is_perfect_on(g)) {
        stats.bump("no_perfect_matching");
        return make_no_decision("clawfree", std::move(stats));
    }
    if (g.min_degree() == 1) {
        stats.bump("leaf_yes");
        return make_yes_decision(g, max_matching(g), "clawfree", std::move(stats));
    }

    // Adjacent degree-2 pair with distinct outer neighbors; this subsumes the
    // induced degree-2 path and also catches a four-cycle hanging off a
    // cluster, whose two inner vertices split off by the same argument.
    auto degree2_pair = [&]() -> std::optional<std::pair<int, int>> {
        for (auto [b, c] : g.edges()) {
            if (g.degree(b) != 2 || g.degree(c) != 2) continue;
            const auto& nb = g.neighbors(b);
            const auto& nc = g.neighbors(c);
            int a = nb[0] == c ? nb[1] : nb[0];
            int d = nc[0] == b ? nc[1] : nc[0];
            if (a == d) continue; // triangle, owned by the cluster stage
            return std::pair{b, c};
        }
        return std::nullopt;
    }();
    if (degree2_pair) {
        auto [b, c] = *degree2_pair;
        // Any perfect matching avoiding bc must use the pair's two outer
        // edges, which form a cut around {b, c}.
        Graph without = remove_edge(g, make_edge(b, c));
        Matching m = max_matching(without);
        if (m.is_perfect_on(without)) {
            stats.bump("degree2_path_yes");
            return make_yes_decision(g, Matching::from_pairs(g, m.pairs), "clawfree",
                                     std::move(stats));
        }
        // Otherwise every perfect matching uses bc; G - bc is claw-free and
        // even, so bc can only be missing a perfect matching by being a
        // bridge, and a bridge inside a perfect matching is already a cut.
        auto bridges = find_bridges(g);
        if (std::find(bridges.begin(), bridges.end(), make_edge(b, c)) == bridges.end())
            throw InternalInvariantError("even claw-free graph minus a non-bridge lost its "
                                         "perfect matching");
        auto through = perfect_matching_through(g, make_edge(b, c));
        if (!through)
            throw InternalInvariantError("no perfect matching through a mandatory edge");
        stats.bump("degree2_bridge_yes");
        return make_yes_decision(g, *through, "clawfree", std::move(stats));
    }

    if (girth_of(g) > 3) {
        // Triangle-free claw-free with minimum degree 2: an even cycle; every
        // other cycle edge is a perfect matching-cut.
        if (g.max_degree() != 2)
            throw InternalInvariantError("triangle-free claw-free graph that is not a cycle");
        std::vector<int> order{0};
        int prev = -1, cur = 0;
        do {
            const auto& nb = g.neighbors(cur);
            int next = nb[0] == prev ? nb[1] : nb[0];
            order.push_back(next);
            prev = cur;
            cur = next;
        } while (cur != 0);
        order.pop_back();
        std::vector<Edge> pairs;
        for (std::size_t i = 0; i + 1 < order.size(); i += 2)
            pairs.push_back(make_edge(order[i], order[i + 1]));
        stats.bump("even_cycle_yes");
        return make_yes_decision(g, Matching::from_pairs(g, pairs), "clawfree",
                                 std::move(stats));
    }

    ClusterGraph cg = build_clusters(g);
    // Every vertex of a claw-free graph with delta >= 2 and a triangle
    // somewhere either sits in a cluster or has degree 2 on a link; analyze()
    // asserted that shape already.
    std::size_t iterations = cg.clusters.size() + 1;
    for (std::size_t round = 0; round < iterations; ++round) {
        stats.bump("case_rounds");
        if (cg.clusters.size() == 1) {
            if (!cg.clusters[0].vertices.all())
                throw InternalInvariantError("single cluster must cover the graph");
            stats.bump("single_cluster_no");
            return make_no_decision("clawfree", std::move(stats));
        }
        // Even cluster whose removal leaves the rest connected.
        for (const auto& c : cg.clusters) {
            if (!c.even()) continue;
            if (!is_connected_subset(g, ~c.vertices)) continue;
            stats.bump("even_cluster_yes");
            return make_yes_decision(g, even_cluster_witness(g, cg, c), "clawfree",
                                     std::move(stats));
        }
        // Odd cluster with a link interior next to it and connected remainder:
        // pulling the interior in makes the core even.
        for (std::size_t ci = 0; ci < cg.clusters.size(); ++ci) {
            const auto& c = cg.clusters[ci];
            if (c.even()) continue;
            if (!is_connected_subset(g, ~c.vertices)) continue;
            for (const auto& link : cg.links) {
                if (link.interior == -1) continue;
                if (link.from_cluster != static_cast<int>(ci) &&
                    link.to_cluster != static_cast<int>(ci))
                    continue;
                std::vector<VertexSet> sets;
                for (const auto& cl : cg.clusters) sets.push_back(cl.vertices);
                sets[ci].set(link.interior);
                ClusterGraph extended = analyze(g, std::move(sets));
                const Cluster& cx = extended.clusters[ci];
                if (!cx.even() || !is_connected_subset(g, ~cx.vertices))
                    throw InternalInvariantError("extending by a link interior must leave an "
                                                 "even separable cluster");
                stats.bump("extended_cluster_yes");
                return make_yes_decision(g, even_cluster_witness(g, extended, cx), "clawfree",
                                         std::move(stats));
            }
        }
        // Leaf in the cluster graph: merge it with its unique neighbor.
        int leaf = -1, buddy = -1;
        for (std::size_t ci = 0; ci < cg.clusters.size() && leaf == -1; ++ci) {
            auto nbrs = cg.neighbors_of(static_cast<int>(ci));
            if (nbrs.size() == 1) {
                leaf = static_cast<int>(ci);
                buddy = nbrs[0];
            }
        }
        if (leaf != -1) {
            stats.bump("leaf_merges");
            cg = analyze(g, merge_clusters(g, cg, leaf, buddy));
            continue;
        }
        // Adjacent odd pair with connected joint complement.
        for (const auto& link : cg.links) {
            const auto& c1 = cg.clusters[link.from_cluster];
            const auto& c2 = cg.clusters[link.to_cluster];
            if (c1.even() || c2.even()) continue;
            if (!is_connected_subset(g, ~(c1.vertices | c2.vertices))) continue;
            stats.bump("odd_pair_merges");
            auto sets = merge_clusters(g, cg, link.from_cluster, link.to_cluster);
            ClusterGraph merged = analyze(g, std::move(sets));
            // The merged cluster is the one containing c1.
            int mi = merged.cluster_of(static_cast<int>(c1.vertices.find_first()));
            const Cluster& cm = merged.clusters[mi];
            if (!cm.even() || !is_connected_subset(g, ~cm.vertices))
                throw InternalInvariantError("merged odd pair must form an even separable "
                                             "cluster");
            stats.bump("merged_pair_yes");
            return make_yes_decision(g, even_cluster_witness(g, merged, cm), "clawfree",
                                     std::move(stats));
        }
        throw InternalInvariantError("no case applies to the cluster graph");
    }
    throw InternalInvariantError("cluster loop failed to terminate");
}

} // namespace pmc

namespace pmc {

std::string cluster_graph_dot(const ClusterGraph& cg) {
    std::ostringstream out;
    out << "graph clusters {\n";
    for (std::size_t i = 0; i < cg.clusters.size(); ++i) {
        const auto& c = cg.clusters[i];
        out << "  c" << i << " [label=\"";
        for (auto v = c.vertices.find_first(); v != VertexSet::npos;
             v = c.vertices.find_next(v))
            out << v << ' ';
        out << (c.even() ? "(even)" : "(odd)") << "\"];\n";
    }
    for (const auto& link : cg.links) {
        out << "  c" << link.from_cluster << " -- c" << link.to_cluster;
        if (link.interior != -1) out << " [label=\"via " << link.interior << "\"]";
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

} // namespace pmc
