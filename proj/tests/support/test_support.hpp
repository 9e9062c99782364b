#pragma once

// Independent reference implementations used as test oracles. Everything here
// is deliberately naive and kept free of the library's own algorithm paths:
// brute-force enumeration only.

#include <algorithm>
#include <deque>
#include <string>
#include <vector>

#include "pmc/generators.hpp"
#include "pmc/graph.hpp"

namespace pmc::testing {

inline int component_count(const Graph& g, const std::vector<Edge>& removed = {}) {
    int n = g.vertex_count();
    std::vector<int> comp(n, -1);
    auto is_removed = [&](int u, int v) {
        Edge e = make_edge(u, v);
        return std::find(removed.begin(), removed.end(), e) != removed.end();
    };
    int count = 0;
    for (int s = 0; s < n; ++s) {
        if (comp[s] != -1) continue;
        comp[s] = count;
        std::deque<int> queue{s};
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            for (int w : g.neighbors(v)) {
                if (comp[w] != -1 || is_removed(v, w)) continue;
                comp[w] = count;
                queue.push_back(w);
            }
        }
        ++count;
    }
    return count;
}

/// Reference graph6 decoder, bit by bit.
inline std::pair<int, std::vector<Edge>> reference_graph6(const std::string& s) {
    std::size_t pos = 0;
    long long n;
    if (s[0] != '~') {
        n = s[0] - 63;
        pos = 1;
    } else {
        n = ((s[1] - 63) << 12) | ((s[2] - 63) << 6) | (s[3] - 63);
        pos = 4;
    }
    std::vector<int> bits;
    for (std::size_t i = pos; i < s.size(); ++i)
        for (int b = 5; b >= 0; --b) bits.push_back((s[i] - 63) >> b & 1);
    std::vector<Edge> edges;
    std::size_t k = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u, ++k)
            if (bits[k]) edges.push_back({u, v});
    return {static_cast<int>(n), edges};
}

/// Maximum matching size by branching on the lowest-indexed uncovered vertex.
inline int brute_max_matching(const Graph& g, VertexSet covered) {
    int n = g.vertex_count();
    int v = -1;
    for (int i = 0; i < n; ++i)
        if (!covered.test(i)) {
            v = i;
            break;
        }
    if (v == -1) return 0;
    covered.set(v);
    int best = brute_max_matching(g, covered); // v stays single
    for (int w : g.neighbors(v)) {
        if (covered.test(w)) continue;
        covered.set(w);
        best = std::max(best, 1 + brute_max_matching(g, covered));
        covered.reset(w);
    }
    return best;
}

inline int brute_max_matching(const Graph& g) {
    return brute_max_matching(g, VertexSet(g.vertex_count()));
}

/// All perfect matchings, by always matching the lowest uncovered vertex.
inline void enumerate_pms(const Graph& g, VertexSet& covered, std::vector<Edge>& acc,
                          std::vector<std::vector<Edge>>& out) {
    int n = g.vertex_count();
    int v = -1;
    for (int i = 0; i < n; ++i)
        if (!covered.test(i)) {
            v = i;
            break;
        }
    if (v == -1) {
        out.push_back(acc);
        return;
    }
    covered.set(v);
    for (int w : g.neighbors(v)) {
        if (covered.test(w)) continue;
        covered.set(w);
        acc.push_back(make_edge(v, w));
        enumerate_pms(g, covered, acc, out);
        acc.pop_back();
        covered.reset(w);
    }
    covered.reset(v);
}

inline std::vector<std::vector<Edge>> all_perfect_matchings(const Graph& g) {
    std::vector<std::vector<Edge>> out;
    if (g.vertex_count() % 2 != 0) return out;
    VertexSet covered(g.vertex_count());
    std::vector<Edge> acc;
    enumerate_pms(g, covered, acc, out);
    return out;
}

/// Ground truth for the perfect matching-cut question along a different
/// route than the library oracle: enumerate perfect matchings and test
/// whether removing one disconnects the graph.
inline bool pmc_by_pm_enumeration(const Graph& g) {
    for (const auto& pm : all_perfect_matchings(g))
        if (component_count(g, pm) > 1) return true;
    return false;
}

inline std::vector<Edge> brute_bridges(const Graph& g) {
    std::vector<Edge> out;
    int base = component_count(g);
    for (auto e : g.edges())
        if (component_count(g, {e}) > base) out.push_back(e);
    return out;
}

/// Induced K_{1,3} by quadruple enumeration.
inline bool brute_has_claw(const Graph& g) {
    int n = g.vertex_count();
    for (int c = 0; c < n; ++c)
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                for (int d = b + 1; d < n; ++d) {
                    if (a == c || b == c || d == c) continue;
                    if (g.has_edge(c, a) && g.has_edge(c, b) && g.has_edge(c, d) &&
                        !g.has_edge(a, b) && !g.has_edge(a, d) && !g.has_edge(b, d))
                        return true;
                }
    return false;
}

/// Induced P5 by ordered quintuple enumeration.
inline bool brute_has_induced_p5(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> p(5);
    auto distinct = [&](int upto) {
        for (int i = 0; i < upto; ++i)
            for (int j = i + 1; j < upto; ++j)
                if (p[i] == p[j]) return false;
        return true;
    };
    for (p[0] = 0; p[0] < n; ++p[0])
        for (p[1] = 0; p[1] < n; ++p[1])
            for (p[2] = 0; p[2] < n; ++p[2])
                for (p[3] = 0; p[3] < n; ++p[3])
                    for (p[4] = p[0]; p[4] < n; ++p[4]) { // p0 < p4 kills reversals
                        if (!distinct(5)) continue;
                        bool path = true;
                        for (int i = 0; i < 5 && path; ++i)
                            for (int j = i + 1; j < 5 && path; ++j) {
                                bool want = j == i + 1;
                                if (g.has_edge(p[i], p[j]) != want) path = false;
                            }
                        if (path) return true;
                    }
    return false;
}

} // namespace pmc::testing
