#include "pmc/generators.hpp"

#include <algorithm>

#include "pmc/classify.hpp"

namespace pmc {

Graph cycle_graph(int k) {
    if (k < 3) throw InputError("cycle needs at least 3 vertices");
    std::vector<Edge> edges;
    for (int i = 0; i < k; ++i) edges.push_back(make_edge(i, (i + 1) % k));
    return Graph(k, std::move(edges));
}

Graph path_graph(int k) {
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < k; ++i) edges.push_back({i, i + 1});
    return Graph(k, std::move(edges));
}

Graph complete_graph(int k) {
    std::vector<Edge> edges;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) edges.push_back({i, j});
    return Graph(k, std::move(edges));
}

Graph complete_bipartite(int a, int b) {
    std::vector<Edge> edges;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) edges.push_back({i, a + j});
    return Graph(a + b, std::move(edges));
}

Graph star_graph(int leaves) { return complete_bipartite(1, leaves); }

Graph prism_graph() {
    return Graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
}

Graph cube_graph() {
    std::vector<Edge> edges;
    for (int v = 0; v < 8; ++v)
        for (int bit = 0; bit < 3; ++bit)
            if (!(v & (1 << bit))) edges.push_back(make_edge(v, v | (1 << bit)));
    return Graph(8, std::move(edges));
}

Graph petersen_graph() {
    std::vector<Edge> edges;
    for (int i = 0; i < 5; ++i) {
        edges.push_back(make_edge(i, (i + 1) % 5)); // outer cycle
        edges.push_back(make_edge(5 + i, 5 + (i + 2) % 5)); // inner pentagram
        edges.push_back(make_edge(i, 5 + i));
    }
    return Graph(10, std::move(edges));
}

Graph knn_minus_pm(int k) {
    if (k < 2) throw InputError("needs k >= 2");
    std::vector<Edge> edges;
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (i != j) edges.push_back({i, k + j});
    return Graph(2 * k, std::move(edges));
}

Graph line_graph(const Graph& g) {
    const auto& es = g.edges();
    int m = g.edge_count();
    std::vector<Edge> edges;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            auto [a, b] = es[i];
            auto [c, d] = es[j];
            if (a == c || a == d || b == c || b == d) edges.push_back({i, j});
        }
    return Graph(m, std::move(edges));
}

Graph gnp(int n, double p, Rng& rng) {
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng)) edges.push_back({i, j});
    return Graph(n, std::move(edges));
}

Graph random_connected(int n, double p, Rng& rng) {
    for (;;) {
        Graph g = gnp(n, p, rng);
        if (is_connected(g)) return g;
    }
}

Graph random_bipartite(int na, int nb, double p, Rng& rng) {
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < nb; ++j)
            if (coin(rng)) edges.push_back({i, na + j});
    return Graph(na + nb, std::move(edges));
}

Graph random_connected_diam2(int n, Rng& rng) {
    for (;;) {
        Graph g = random_connected(n, 0.5, rng);
        int d = diameter_of(g);
        if (d >= 1 && d <= 2) return g;
    }
}

namespace {

Graph random_bipartite_diam3(int n, Rng& rng, std::vector<std::uint8_t>* sides, bool exact) {
    for (;;) {
        int na = std::uniform_int_distribution<int>(1, n - 1)(rng);
        Graph g = random_bipartite(na, n - na, 0.7, rng);
        if (!is_connected(g)) continue;
        int d = diameter_of(g);
        if (exact ? d != 3 : d > 3) continue;
        if (sides) {
            sides->assign(n, 0);
            for (int v = na; v < n; ++v) (*sides)[v] = 1;
        }
        return g;
    }
}

} // namespace

Graph random_bipartite_diam_le3(int n, Rng& rng, std::vector<std::uint8_t>* sides) {
    return random_bipartite_diam3(n, rng, sides, false);
}

Graph random_bipartite_diam_exactly3(int n, Rng& rng, std::vector<std::uint8_t>* sides) {
    return random_bipartite_diam3(n, rng, sides, true);
}

Graph random_p5free(int n, Rng& rng) {
    for (;;) {
        Graph g = random_connected(n, 0.75, rng);
        if (is_p5_free(g)) return g;
    }
}

Graph random_tree(int n, Rng& rng) {
    std::vector<Edge> edges;
    for (int v = 1; v < n; ++v)
        edges.push_back(make_edge(std::uniform_int_distribution<int>(0, v - 1)(rng), v));
    return Graph(n, std::move(edges));
}

Graph random_clawfree(int n, Rng& rng) {
    // Alternate between line graphs (claw-free by construction, built from a
    // random connected base with exactly n edges) and dense rejection samples.
    for (int attempt = 0;; ++attempt) {
        if (attempt % 2 == 0) {
            int nb = std::max(3, std::uniform_int_distribution<int>(n / 2, n)(rng));
            if (static_cast<long long>(nb) * (nb - 1) / 2 < n) continue;
            Graph tree = random_tree(nb, rng);
            std::vector<Edge> edges = tree.edges();
            std::uniform_int_distribution<int> pick(0, nb - 1);
            while (static_cast<int>(edges.size()) < n) {
                Edge e = make_edge(pick(rng), pick(rng));
                if (e.first == e.second) continue;
                if (std::find(edges.begin(), edges.end(), e) != edges.end()) continue;
                edges.push_back(e);
            }
            return line_graph(Graph(nb, std::move(edges)));
        }
        Graph g = random_connected(n, 0.9, rng);
        if (is_claw_free(g)) return g;
    }
}

Graph random_cubic_with_bridge(Rng& rng) {
    auto half = [&](Rng& r) {
        switch (std::uniform_int_distribution<int>(0, 2)(r)) {
            case 0: return complete_graph(4);
            case 1: return prism_graph();
            default: return complete_bipartite(3, 3);
        }
    };
    Graph h1 = half(rng), h2 = half(rng);
    int n1 = h1.vertex_count(), n2 = h2.vertex_count();
    // Subdivide one random edge of each half with a fresh vertex, then join
    // the two fresh vertices; all degrees stay three and the joint is a
    // bridge.
    auto e1 = h1.edges()[std::uniform_int_distribution<std::size_t>(0, h1.edges().size() - 1)(rng)];
    auto e2 = h2.edges()[std::uniform_int_distribution<std::size_t>(0, h2.edges().size() - 1)(rng)];
    int u1 = n1 + n2, u2 = n1 + n2 + 1;
    std::vector<Edge> edges;
    for (auto e : h1.edges())
        if (e != e1) edges.push_back(e);
    for (auto [a, b] : h2.edges())
        if (std::pair{a, b} != e2) edges.push_back({a + n1, b + n1});
    edges.push_back(make_edge(e1.first, u1));
    edges.push_back(make_edge(e1.second, u1));
    edges.push_back(make_edge(e2.first + n1, u2));
    edges.push_back(make_edge(e2.second + n1, u2));
    edges.push_back(make_edge(u1, u2));
    return Graph(n1 + n2 + 2, std::move(edges));
}

} // namespace pmc
