#include "pmc/classify.hpp"

#include <algorithm>
#include <deque>
#include <functional>

namespace pmc {

std::vector<int> bfs_distances(const Graph& g, int source) {
    std::vector<int> dist(g.vertex_count(), kInfinity);
    std::deque<int> queue{source};
    dist[source] = 0;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int w : g.neighbors(v)) {
            if (dist[w] == kInfinity) {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

bool is_connected(const Graph& g) {
    if (g.vertex_count() <= 1) return true;
    auto dist = bfs_distances(g, 0);
    return std::find(dist.begin(), dist.end(), kInfinity) == dist.end();
}

bool is_connected_subset(const Graph& g, const VertexSet& s) {
    auto start = s.find_first();
    if (start == VertexSet::npos) return true;
    VertexSet seen(g.vertex_count());
    seen.set(start);
    std::deque<int> queue{static_cast<int>(start)};
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        VertexSet next = g.adj(v) & s & ~seen;
        for (auto w = next.find_first(); w != VertexSet::npos; w = next.find_next(w)) {
            seen.set(w);
            queue.push_back(static_cast<int>(w));
        }
    }
    return seen == s;
}

int diameter_of(const Graph& g) {
    int n = g.vertex_count();
    if (n == 0) return 0;
    int diam = 0;
    for (int v = 0; v < n; ++v) {
        auto dist = bfs_distances(g, v);
        for (int d : dist) {
            if (d == kInfinity) return kInfinity;
            diam = std::max(diam, d);
        }
    }
    return diam;
}

int girth_of(const Graph& g) {
    // Shortest cycle through edge (u,v) = dist_{G-uv}(u,v) + 1; exact at desk
    // scale.
    int best = kInfinity;
    for (auto e : g.edges()) {
        Graph h = remove_edge(g, e);
        int d = bfs_distances(h, e.first)[e.second];
        if (d != kInfinity) best = std::min(best, d + 1);
    }
    return best;
}

std::optional<std::vector<std::uint8_t>> two_coloring(const Graph& g) {
    int n = g.vertex_count();
    std::vector<std::uint8_t> color(n, 2);
    for (int start = 0; start < n; ++start) {
        if (color[start] != 2) continue;
        color[start] = 0;
        std::deque<int> queue{start};
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            for (int w : g.neighbors(v)) {
                if (color[w] == 2) {
                    color[w] = static_cast<std::uint8_t>(1 - color[v]);
                    queue.push_back(w);
                } else if (color[w] == color[v]) {
                    return std::nullopt;
                }
            }
        }
    }
    return color;
}

std::vector<Edge> find_bridges(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> entry(n, -1), low(n, 0);
    std::vector<Edge> bridges;
    int timer = 0;
    std::function<void(int, int)> dfs = [&](int v, int parent) {
        entry[v] = low[v] = timer++;
        bool skipped_parent = false;
        for (int w : g.neighbors(v)) {
            if (w == parent && !skipped_parent) {
                skipped_parent = true; // parallel edges cannot occur, skip once
                continue;
            }
            if (entry[w] != -1) {
                low[v] = std::min(low[v], entry[w]);
            } else {
                dfs(w, v);
                low[v] = std::min(low[v], low[w]);
                if (low[w] > entry[v]) bridges.push_back(make_edge(v, w));
            }
        }
    };
    for (int v = 0; v < n; ++v)
        if (entry[v] == -1) dfs(v, -1);
    std::sort(bridges.begin(), bridges.end());
    return bridges;
}

bool is_claw_free(const Graph& g) {
    for (int v = 0; v < g.vertex_count(); ++v) {
        const auto& nbrs = g.neighbors(v);
        int d = static_cast<int>(nbrs.size());
        for (int i = 0; i < d; ++i)
            for (int j = i + 1; j < d; ++j) {
                if (g.has_edge(nbrs[i], nbrs[j])) continue;
                for (int k = j + 1; k < d; ++k)
                    if (!g.has_edge(nbrs[i], nbrs[k]) && !g.has_edge(nbrs[j], nbrs[k]))
                        return false;
            }
    }
    return true;
}

namespace {

// Extends an induced path one vertex at a time; the next vertex must be
// adjacent to the tail and to nothing earlier on the path.
bool extend_induced_path(const Graph& g, std::vector<int>& path, VertexSet& forbidden,
                         int target_len) {
    if (static_cast<int>(path.size()) == target_len) return true;
    int tail = path.back();
    for (int w : g.neighbors(tail)) {
        if (forbidden.test(w)) continue;
        bool chord = false;
        for (std::size_t i = 0; i + 1 < path.size(); ++i)
            if (g.has_edge(path[i], w)) {
                chord = true;
                break;
            }
        if (chord) continue;
        path.push_back(w);
        forbidden.set(w);
        if (extend_induced_path(g, path, forbidden, target_len)) return true;
        forbidden.reset(w);
        path.pop_back();
    }
    return false;
}

} // namespace

bool is_p5_free(const Graph& g) {
    VertexSet forbidden(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) {
        std::vector<int> path{v};
        forbidden.set(v);
        bool found = extend_induced_path(g, path, forbidden, 5);
        forbidden.reset(v);
        if (found) return false;
    }
    return true;
}

bool is_cubic(const Graph& g) {
    if (g.vertex_count() == 0) return false;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) != 3) return false;
    return true;
}

namespace {

// Backtracking search for a subdivision of a fixed pattern: branch vertices
// are picked first, then the required pairs are realized one at a time by
// internally disjoint paths. Complete unless the step budget runs out.
class SubdivisionSearch {
  public:
    SubdivisionSearch(const Graph& g, long long budget) : g_(g), budget_(budget) {}

    bool exhausted() const { return budget_ < 0; }

    bool find_k5() {
        std::vector<int> candidates;
        for (int v = 0; v < g_.vertex_count(); ++v)
            if (g_.degree(v) >= 4) candidates.push_back(v);
        std::vector<int> branch;
        return choose_branches(candidates, 0, 5, branch, [&](const std::vector<int>& b) {
            std::vector<std::pair<int, int>> pairs;
            for (int i = 0; i < 5; ++i)
                for (int j = i + 1; j < 5; ++j) pairs.emplace_back(b[i], b[j]);
            return realize(b, pairs);
        });
    }

    bool find_k33() {
        std::vector<int> candidates;
        for (int v = 0; v < g_.vertex_count(); ++v)
            if (g_.degree(v) >= 3) candidates.push_back(v);
        std::vector<int> six;
        return choose_branches(candidates, 0, 6, six, [&](const std::vector<int>& b) {
            // All splits of the six branch vertices into two triples; fixing
            // b[0] on the first side halves the symmetric duplicates.
            for (int i = 1; i < 6; ++i)
                for (int j = i + 1; j < 6; ++j) {
                    std::vector<int> left{b[0], b[i], b[j]}, right;
                    for (int k = 1; k < 6; ++k)
                        if (k != i && k != j) right.push_back(b[k]);
                    std::vector<std::pair<int, int>> pairs;
                    for (int x : left)
                        for (int y : right) pairs.emplace_back(x, y);
                    if (realize(b, pairs)) return true;
                    if (exhausted()) return false;
                }
            return false;
        });
    }

  private:
    template <typename Fn>
    bool choose_branches(const std::vector<int>& candidates, std::size_t from, int need,
                         std::vector<int>& branch, Fn&& attempt) {
        if (need == 0) return attempt(branch);
        if (candidates.size() - from < static_cast<std::size_t>(need)) return false;
        for (std::size_t i = from; i + need <= candidates.size(); ++i) {
            branch.push_back(candidates[i]);
            if (choose_branches(candidates, i + 1, need - 1, branch, attempt)) return true;
            branch.pop_back();
            if (exhausted()) return false;
        }
        return false;
    }

    bool realize(const std::vector<int>& branch, const std::vector<std::pair<int, int>>& pairs) {
        used_ = VertexSet(g_.vertex_count());
        for (int b : branch) used_.set(b);
        return assign_pair(pairs, 0);
    }

    bool assign_pair(const std::vector<std::pair<int, int>>& pairs, std::size_t idx) {
        if (budget_-- < 0) return false;
        if (idx == pairs.size()) return true;
        auto [s, t] = pairs[idx];
        return walk(s, t, s, pairs, idx);
    }

    // Enumerates all simple paths s -> t whose interior avoids used_.
    bool walk(int s, int t, int at, const std::vector<std::pair<int, int>>& pairs,
              std::size_t idx) {
        if (budget_-- < 0) return false;
        for (int w : g_.neighbors(at)) {
            if (w == t) {
                if (assign_pair(pairs, idx + 1)) return true;
                if (exhausted()) return false;
                continue;
            }
            if (used_.test(w)) continue;
            used_.set(w);
            if (walk(s, t, w, pairs, idx)) return true;
            used_.reset(w);
            if (exhausted()) return false;
        }
        return false;
    }

    const Graph& g_;
    long long budget_;
    VertexSet used_;
};

bool component_violates_euler(const Graph& g) {
    auto dist = bfs_distances(g, 0);
    // Applies the bound per component.
    std::vector<char> seen(g.vertex_count(), 0);
    for (int start = 0; start < g.vertex_count(); ++start) {
        if (seen[start]) continue;
        std::deque<int> queue{start};
        seen[start] = 1;
        long long nv = 0, ne = 0;
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            ++nv;
            ne += g.degree(v);
            for (int w : g.neighbors(v))
                if (!seen[w]) {
                    seen[w] = 1;
                    queue.push_back(w);
                }
        }
        ne /= 2;
        if (nv >= 3 && ne > 3 * nv - 6) return true;
    }
    return false;
}

} // namespace

PlanarHint planar_hint_of(const Graph& g) {
    if (g.vertex_count() > 30) return PlanarHint::unknown;
    if (g.vertex_count() >= 3 && component_violates_euler(g))
        return PlanarHint::verified_nonplanar;
    constexpr long long kBudget = 20'000'000;
    SubdivisionSearch k33(g, kBudget);
    if (k33.find_k33()) return PlanarHint::verified_nonplanar;
    if (k33.exhausted()) return PlanarHint::unknown;
    SubdivisionSearch k5(g, kBudget);
    if (k5.find_k5()) return PlanarHint::verified_nonplanar;
    if (k5.exhausted()) return PlanarHint::unknown;
    return PlanarHint::verified_planar;
}

ClassReport classify(const Graph& g) {
    ClassReport r;
    r.connected = is_connected(g);
    r.bipartition = two_coloring(g);
    r.diameter = r.connected ? diameter_of(g) : kInfinity;
    r.girth = girth_of(g);
    r.min_degree = g.min_degree();
    r.max_degree = g.max_degree();
    r.claw_free = is_claw_free(g);
    r.p5_free = is_p5_free(g);
    r.cubic = is_cubic(g);
    r.bridges = find_bridges(g);
    r.planar_hint = planar_hint_of(g);
    return r;
}

} // namespace pmc
