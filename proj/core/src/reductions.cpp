#include "pmc/reductions.hpp"

#include <algorithm>
#include <deque>

#include "pmc/classify.hpp"
#include "pmc/oracle.hpp"

namespace pmc {

namespace {

int source_n(const ReductionMap& rm) { return rm.source.vertex_count(); }

} // namespace

int ReductionMap::copy_vertex(int copy, int i) const {
    int n = source.vertex_count();
    return copy == 1 ? i : n + i;
}

int ReductionMap::block_vertex(int copy, int i, int j) const {
    int n = source.vertex_count();
    return 2 * n + (copy - 1) * n * n + i * n + j;
}

std::pair<int, int> ReductionMap::block_range(int copy, int i) const {
    int begin = block_vertex(copy, i, 0);
    return {begin, begin + source.vertex_count()};
}

const ReductionMap::PairEdges& ReductionMap::pair_edges(int i, int j) const {
    auto it = connectors.find({std::min(i, j), std::max(i, j)});
    if (it == connectors.end()) throw InternalInvariantError("missing connector pair");
    return it->second;
}

namespace {

// Endpoint index inside block i for the pair {i, j}: a bijection from the
// n - 1 partners into 0..n-2, leaving the block's last vertex with no
// external connector.
int connector_slot(int i, int j) { return j < i ? j : j - 1; }

void verify_diameter(const Graph& g, int expected, const char* what) {
    if (diameter_of(g) != expected)
        throw InternalInvariantError(std::string(what) + ": target diameter is off");
}

} // namespace

ReductionMap reduce_diam3(const Graph& g) {
    int n = g.vertex_count();
    if (n < 2) throw InputError("source needs at least two vertices");
    if (!is_connected(g)) throw InputError("source must be connected");

    ReductionMap rm;
    rm.source = g;
    rm.kind = ReductionKind::diam3;
    int total = 2 * n * (n + 1);
    std::vector<Edge> edges;

    for (int copy = 1; copy <= 2; ++copy) {
        // Source edges within the copy.
        for (auto [u, v] : g.edges())
            edges.push_back(make_edge(rm.copy_vertex(copy, u), rm.copy_vertex(copy, v)));
        for (int i = 0; i < n; ++i) {
            auto [b, e] = rm.block_range(copy, i);
            for (int x = b; x < e; ++x) {
                for (int y = x + 1; y < e; ++y) edges.push_back({x, y});
                edges.push_back(make_edge(rm.copy_vertex(copy, i), x));
            }
        }
        // One edge per clique pair inside the copy.
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                Edge e = make_edge(rm.block_vertex(copy, i, connector_slot(i, j)),
                                   rm.block_vertex(copy, j, connector_slot(j, i)));
                if (copy == 1)
                    rm.connectors[{i, j}].first = e;
                else
                    rm.connectors[{i, j}].second = e;
                edges.push_back(e);
            }
    }
    // Matching blocks of the two copies become one 2n-clique, adjacent to
    // both copy vertices (the copy vertices themselves stay non-adjacent).
    for (int i = 0; i < n; ++i) {
        auto [b1, e1] = rm.block_range(1, i);
        auto [b2, e2] = rm.block_range(2, i);
        for (int x = b1; x < e1; ++x)
            for (int y = b2; y < e2; ++y) edges.push_back(make_edge(x, y));
        for (int y = b2; y < e2; ++y) edges.push_back(make_edge(rm.copy_vertex(1, i), y));
        for (int x = b1; x < e1; ++x) edges.push_back(make_edge(rm.copy_vertex(2, i), x));
    }
    rm.target = Graph(total, std::move(edges));
    verify_diameter(rm.target, 3, "diam3 construction");
    return rm;
}

ReductionMap reduce_bipdiam4(const Graph& g, const std::vector<std::uint8_t>& sides) {
    int n = g.vertex_count();
    if (!is_connected(g)) throw InputError("source must be connected");
    if (static_cast<int>(sides.size()) != n) throw InputError("coloring size mismatch");
    for (auto [u, v] : g.edges())
        if (sides[u] == sides[v]) throw InputError("source is not bipartite");
    if (diameter_of(g) != 3) throw InputError("source must have diameter exactly 3");

    ReductionMap rm;
    rm.source = g;
    rm.kind = ReductionKind::bipdiam4;
    rm.source_sides = sides;
    int total = 2 * n * (n + 1);
    std::vector<Edge> edges;

    for (int copy = 1; copy <= 2; ++copy) {
        for (auto [u, v] : g.edges())
            edges.push_back(make_edge(rm.copy_vertex(copy, u), rm.copy_vertex(copy, v)));
        // Copy vertex complete to its own (independent) block.
        for (int i = 0; i < n; ++i) {
            auto [b, e] = rm.block_range(copy, i);
            for (int x = b; x < e; ++x)
                edges.push_back(make_edge(rm.copy_vertex(copy, i), x));
        }
    }
    // Matching blocks form K_{n,n}.
    for (int i = 0; i < n; ++i) {
        auto [b1, e1] = rm.block_range(1, i);
        auto [b2, e2] = rm.block_range(2, i);
        for (int x = b1; x < e1; ++x)
            for (int y = b2; y < e2; ++y) edges.push_back(make_edge(x, y));
    }
    // Connector edges; the per-block cursor keeps them a matching.
    std::vector<std::array<int, 2>> cursor(n, {0, 0});
    auto take = [&](int copy, int i) {
        int j = cursor[i][copy - 1]++;
        if (j >= n) throw InternalInvariantError("connector cursor overflow");
        return rm.block_vertex(copy, i, j);
    };
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            ReductionMap::PairEdges pe;
            if (sides[i] == sides[j]) {
                pe.first = make_edge(take(1, i), take(2, j));
                pe.second = make_edge(take(2, i), take(1, j));
            } else {
                pe.first = make_edge(take(1, i), take(1, j));
                pe.second = make_edge(take(2, i), take(2, j));
            }
            edges.push_back(pe.first);
            edges.push_back(pe.second);
            rm.connectors[{i, j}] = pe;
        }
    rm.target = Graph(total, std::move(edges));
    if (!two_coloring(rm.target)) throw InternalInvariantError("bipdiam4 target not bipartite");
    verify_diameter(rm.target, 4, "bipdiam4 construction");
    return rm;
}

std::vector<std::uint8_t> matching_cut_partition(const Graph& g, const std::vector<Edge>& cut) {
    Matching::from_pairs(g, cut); // validates matching-ness and membership
    if (cut.empty()) throw InputError("a matching-cut cannot be empty");
    int n = g.vertex_count();
    VertexSet in_cut_edge(n);
    std::vector<int> cut_partner(n, -1);
    for (auto [u, v] : cut) {
        cut_partner[u] = v;
        cut_partner[v] = u;
        in_cut_edge.set(u);
        in_cut_edge.set(v);
    }
    // Two-color the components of g - cut, requiring every cut edge to cross.
    std::vector<std::int8_t> side(n, -1);
    for (int start = 0; start < n; ++start) {
        if (side[start] != -1) continue;
        side[start] = 0;
        std::deque<int> queue{start};
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            for (int w : g.neighbors(v)) {
                std::int8_t want =
                    cut_partner[v] == w ? static_cast<std::int8_t>(1 - side[v]) : side[v];
                if (side[w] == -1) {
                    side[w] = want;
                    queue.push_back(w);
                } else if (side[w] != want) {
                    throw InputError("edge set is not an exact matching-cut");
                }
            }
        }
    }
    std::vector<std::uint8_t> out(n);
    bool has0 = false, has1 = false;
    for (int v = 0; v < n; ++v) {
        out[v] = static_cast<std::uint8_t>(side[v]);
        (out[v] == 0 ? has0 : has1) = true;
    }
    if (!has0 || !has1) throw InputError("edge set does not disconnect the graph");
    return out;
}

PmcCertificate lift_certificate(const ReductionMap& rm, const std::vector<Edge>& source_cut) {
    const Graph& src = rm.source;
    const Graph& tgt = rm.target;
    int n = source_n(rm);
    auto side = matching_cut_partition(src, source_cut);

    std::vector<Edge> pairs;
    VertexSet covered(tgt.vertex_count());
    auto add = [&](Edge e) {
        if (covered.test(e.first) || covered.test(e.second))
            throw InternalInvariantError("lift selected overlapping edges");
        covered.set(e.first);
        covered.set(e.second);
        pairs.push_back(make_edge(e.first, e.second));
    };

    // Connector edges for every pair straddling the source partition.
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (side[i] != side[j]) {
                const auto& pe = rm.pair_edges(i, j);
                add(pe.first);
                add(pe.second);
            }
    // The source cut, in both copies.
    VertexSet cut_covered(n);
    for (auto [u, v] : source_cut) {
        add(make_edge(rm.copy_vertex(1, u), rm.copy_vertex(1, v)));
        add(make_edge(rm.copy_vertex(2, u), rm.copy_vertex(2, v)));
        cut_covered.set(u);
        cut_covered.set(v);
    }
    // A source vertex the cut missed sends each of its copies into its own
    // block (for the clique construction either block would do; the bipartite
    // one only sees its own).
    for (int i = 0; i < n; ++i) {
        if (cut_covered.test(i)) continue;
        for (int copy = 1; copy <= 2; ++copy) {
            auto [b, e] = rm.block_range(copy, i);
            int pick = -1;
            for (int x = b; x < e; ++x)
                if (!covered.test(x)) {
                    pick = x;
                    break;
                }
            if (pick == -1) throw InternalInvariantError("no uncovered block vertex left");
            add(make_edge(rm.copy_vertex(copy, i), pick));
        }
    }
    // Pair off what remains of each block pair. The clique construction can
    // match anything to anything there; the bipartite one pairs across the
    // two blocks, and both sides have equally many vertices left.
    for (int i = 0; i < n; ++i) {
        auto [b1, e1] = rm.block_range(1, i);
        auto [b2, e2] = rm.block_range(2, i);
        std::vector<int> rest1, rest2;
        for (int x = b1; x < e1; ++x)
            if (!covered.test(x)) rest1.push_back(x);
        for (int y = b2; y < e2; ++y)
            if (!covered.test(y)) rest2.push_back(y);
        if (rm.kind == ReductionKind::bipdiam4) {
            if (rest1.size() != rest2.size())
                throw InternalInvariantError("bipartite blocks out of balance");
            for (std::size_t k = 0; k < rest1.size(); ++k)
                add(make_edge(rest1[k], rest2[k]));
        } else {
            std::vector<int> rest = rest1;
            rest.insert(rest.end(), rest2.begin(), rest2.end());
            if (rest.size() % 2 != 0)
                throw InternalInvariantError("odd remainder in a block pair");
            for (std::size_t k = 0; k < rest.size(); k += 2)
                add(make_edge(rest[k], rest[k + 1]));
        }
    }

    auto cert = verify_pmc(tgt, Matching::from_pairs(tgt, std::move(pairs)));
    if (!cert) throw InternalInvariantError("lifted matching failed verification");
    return std::move(*cert);
}

std::vector<Edge> project_certificate(const ReductionMap& rm, const PmcCertificate& cert) {
    const Graph& src = rm.source;
    int n = source_n(rm);
    // Copy-1 source edges picked by the target matching.
    std::vector<Edge> m1;
    VertexSet m1_partner(n);
    std::vector<int> partner(n, -1);
    for (auto [u, v] : cert.matching.pairs)
        if (u < n && v < n) {
            m1.push_back({u, v});
            partner[u] = v;
            partner[v] = u;
        }
    // Component split of source minus m1; edges leaving the component of
    // vertex 0 form the projected matching-cut.
    VertexSet comp(n);
    comp.set(0);
    std::deque<int> queue{0};
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int w : src.neighbors(v)) {
            if (partner[v] == w || comp.test(w)) continue;
            comp.set(w);
            queue.push_back(w);
        }
    }
    if (comp.all())
        throw InputError("certificate does not disconnect the first copy");
    std::vector<Edge> cut;
    for (auto [u, v] : src.edges())
        if (comp.test(u) != comp.test(v)) cut.push_back({u, v});
    matching_cut_partition(src, cut); // sanity: exact matching-cut
    return cut;
}

} // namespace pmc
