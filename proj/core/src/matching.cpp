#include "pmc/matching.hpp"

#include <algorithm>
#include <deque>
#include <functional>

namespace pmc {

Matching Matching::from_pairs(const Graph& g, std::vector<Edge> pairs) {
    Matching m;
    m.covered = VertexSet(g.vertex_count());
    for (auto& e : pairs) {
        e = make_edge(e.first, e.second);
        if (!g.has_edge(e.first, e.second)) throw InputError("matching edge not in graph");
        if (m.covered.test(e.first) || m.covered.test(e.second))
            throw InputError("edges share a vertex, not a matching");
        m.covered.set(e.first);
        m.covered.set(e.second);
    }
    std::sort(pairs.begin(), pairs.end());
    m.pairs = std::move(pairs);
    return m;
}

int Matching::partner(int v) const {
    for (auto [a, b] : pairs) {
        if (a == v) return b;
        if (b == v) return a;
    }
    return -1;
}

namespace {

// Edmonds' blossom algorithm, array-based contraction. O(V^3); the solvers'
// own complexity dominates at desk scale.
class Blossom {
  public:
    explicit Blossom(const Graph& g) : g_(g), n_(g.vertex_count()), match_(n_, -1) {}

    std::vector<int> run() {
        // Greedy seeding in ascending order keeps the result canonical.
        for (int v = 0; v < n_; ++v) {
            if (match_[v] != -1) continue;
            for (int w : g_.neighbors(v)) {
                if (match_[w] == -1) {
                    match_[v] = w;
                    match_[w] = v;
                    break;
                }
            }
        }
        for (int v = 0; v < n_; ++v)
            if (match_[v] == -1) augment_from(v);
        return match_;
    }

  private:
    int lca(std::vector<int>& base, int a, int b) {
        std::vector<char> seen(n_, 0);
        for (;;) {
            a = base[a];
            seen[a] = 1;
            if (match_[a] == -1) break;
            a = parent_[match_[a]];
        }
        for (;;) {
            b = base[b];
            if (seen[b]) return b;
            b = parent_[match_[b]];
        }
    }

    void mark_path(std::vector<int>& base, std::vector<char>& blossom, int v, int b, int child) {
        while (base[v] != b) {
            blossom[base[v]] = 1;
            blossom[base[match_[v]]] = 1;
            parent_[v] = child;
            child = match_[v];
            v = parent_[match_[v]];
        }
    }

    void augment_from(int root) {
        parent_.assign(n_, -1);
        std::vector<int> base(n_);
        for (int i = 0; i < n_; ++i) base[i] = i;
        std::vector<char> used(n_, 0);
        used[root] = 1;
        std::deque<int> queue{root};
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            for (int w : g_.neighbors(v)) {
                if (base[v] == base[w] || match_[v] == w) continue;
                if (w == root || (match_[w] != -1 && parent_[match_[w]] != -1)) {
                    // Odd cycle: contract the blossom.
                    int b = lca(base, v, w);
                    std::vector<char> blossom(n_, 0);
                    mark_path(base, blossom, v, b, w);
                    mark_path(base, blossom, w, b, v);
                    for (int i = 0; i < n_; ++i) {
                        if (!blossom[base[i]]) continue;
                        base[i] = b;
                        if (!used[i]) {
                            used[i] = 1;
                            queue.push_back(i);
                        }
                    }
                } else if (parent_[w] == -1) {
                    parent_[w] = v;
                    if (match_[w] == -1) {
                        // Augmenting path found; flip it.
                        int u = w;
                        while (u != -1) {
                            int pv = parent_[u];
                            int next = match_[pv];
                            match_[u] = pv;
                            match_[pv] = u;
                            u = next;
                        }
                        return;
                    }
                    used[match_[w]] = 1;
                    queue.push_back(match_[w]);
                }
            }
        }
    }

    const Graph& g_;
    int n_;
    std::vector<int> match_;
    std::vector<int> parent_;
};

Matching matching_from_partner_array(const Graph& g, const std::vector<int>& match) {
    std::vector<Edge> pairs;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (match[v] > v) pairs.push_back(make_edge(v, match[v]));
    return Matching::from_pairs(g, std::move(pairs));
}

} // namespace

Matching max_matching(const Graph& g) {
    return matching_from_partner_array(g, Blossom(g).run());
}

Matching bipartite_max_matching(const Graph& g, const std::vector<std::uint8_t>& sides) {
    int n = g.vertex_count();
    if (static_cast<int>(sides.size()) != n) throw InputError("coloring size mismatch");
    for (auto [u, v] : g.edges())
        if (sides[u] == sides[v]) throw InputError("not a proper two-coloring");

    std::vector<int> left;
    for (int v = 0; v < n; ++v)
        if (sides[v] == 0) left.push_back(v);

    constexpr int kUnreached = -1;
    std::vector<int> match(n, -1), layer(n);
    auto bfs_layers = [&]() {
        std::deque<int> queue;
        layer.assign(n, kUnreached);
        for (int v : left)
            if (match[v] == -1) {
                layer[v] = 0;
                queue.push_back(v);
            }
        bool found_free = false;
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            for (int w : g.neighbors(v)) {
                if (layer[w] != kUnreached) continue;
                layer[w] = layer[v] + 1;
                if (match[w] == -1) {
                    found_free = true;
                } else if (layer[match[w]] == kUnreached) {
                    layer[match[w]] = layer[w] + 1;
                    queue.push_back(match[w]);
                }
            }
        }
        return found_free;
    };
    std::function<bool(int)> dfs_augment = [&](int v) {
        for (int w : g.neighbors(v)) {
            if (layer[w] != layer[v] + 1) continue;
            int lw = layer[w];
            layer[w] = kUnreached;
            if (match[w] == -1 || (layer[match[w]] == lw + 1 && dfs_augment(match[w]))) {
                match[v] = w;
                match[w] = v;
                return true;
            }
        }
        layer[v] = kUnreached;
        return false;
    };
    while (bfs_layers()) {
        for (int v : left)
            if (match[v] == -1) dfs_augment(v);
    }
    return matching_from_partner_array(g, match);
}

std::optional<Matching> perfect_matching_through(const Graph& g, Edge e) {
    e = make_edge(e.first, e.second);
    if (!g.has_edge(e.first, e.second)) throw InputError("edge not in graph");
    VertexSet rest = g.full_set();
    rest.reset(e.first);
    rest.reset(e.second);
    auto sub = pm_on_subset(g, rest);
    if (!sub) return std::nullopt;
    auto pairs = sub->pairs;
    pairs.push_back(e);
    return Matching::from_pairs(g, std::move(pairs));
}

std::optional<Matching> pm_on_subset(const Graph& g, const VertexSet& w) {
    if (w.count() % 2 != 0) return std::nullopt;
    auto [sub, to_parent] = induced(g, w);
    Matching m = max_matching(sub);
    if (!m.is_perfect_on(sub)) return std::nullopt;
    std::vector<Edge> pairs;
    pairs.reserve(m.pairs.size());
    for (auto [u, v] : m.pairs) pairs.push_back(make_edge(to_parent[u], to_parent[v]));
    return Matching::from_pairs(g, std::move(pairs));
}

} // namespace pmc
