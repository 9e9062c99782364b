#include "pmc/graph.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace pmc {

Graph::Graph(int n, std::vector<Edge> edge_list) : n_(n) {
    if (n < 0) throw InputError("vertex count must be non-negative");
    for (auto& [u, v] : edge_list) {
        if (u > v) std::swap(u, v);
        if (u < 0 || v >= n) throw InputError("edge endpoint out of range");
        if (u == v) throw InputError("self-loop");
    }
    std::sort(edge_list.begin(), edge_list.end());
    if (std::adjacent_find(edge_list.begin(), edge_list.end()) != edge_list.end())
        throw InputError("duplicate edge");
    edges_ = std::move(edge_list);
    neighbor_lists_.resize(n_);
    adj_rows_.assign(n_, VertexSet(n_));
    for (auto [u, v] : edges_) {
        neighbor_lists_[u].push_back(v);
        neighbor_lists_[v].push_back(u);
        adj_rows_[u].set(v);
        adj_rows_[v].set(u);
    }
    for (auto& list : neighbor_lists_) std::sort(list.begin(), list.end());
}

int Graph::min_degree() const {
    int d = n_ == 0 ? 0 : degree(0);
    for (int v = 1; v < n_; ++v) d = std::min(d, degree(v));
    return d;
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
}

VertexSet Graph::full_set() const {
    VertexSet s(n_);
    s.set();
    return s;
}

InducedGraph induced(const Graph& g, const VertexSet& s) {
    if (static_cast<int>(s.size()) != g.vertex_count())
        throw InputError("vertex set size does not match graph");
    std::vector<int> to_parent;
    std::vector<int> to_child(g.vertex_count(), -1);
    for (auto v = s.find_first(); v != VertexSet::npos; v = s.find_next(v)) {
        to_child[v] = static_cast<int>(to_parent.size());
        to_parent.push_back(static_cast<int>(v));
    }
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges())
        if (to_child[u] >= 0 && to_child[v] >= 0)
            edges.emplace_back(to_child[u], to_child[v]);
    return {Graph(static_cast<int>(to_parent.size()), std::move(edges)), std::move(to_parent)};
}

Graph remove_edge(const Graph& g, Edge e) {
    e = make_edge(e.first, e.second);
    if (!g.has_edge(e.first, e.second)) throw InputError("edge not in graph");
    std::vector<Edge> edges;
    edges.reserve(g.edge_count() - 1);
    for (auto f : g.edges())
        if (f != e) edges.push_back(f);
    return Graph(g.vertex_count(), std::move(edges));
}

namespace {

[[noreturn]] void parse_fail(int line_no, const std::string& what) {
    throw ParseError("line " + std::to_string(line_no) + ": " + what);
}

} // namespace

Graph parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    long long n = -1, m = -1;
    std::vector<Edge> edges;
    while (std::getline(in, line)) {
        ++line_no;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        if (line[first] == '#') continue;
        std::istringstream fields(line);
        if (n < 0) {
            std::string tag;
            fields >> tag >> n >> m;
            if (tag != "pmc" || fields.fail() || n < 0 || m < 0)
                parse_fail(line_no, "malformed header, expected 'pmc <n> <m>'");
            continue;
        }
        long long u, v;
        fields >> u >> v;
        if (fields.fail()) parse_fail(line_no, "expected '<u> <v>'");
        if (u < 0 || u >= n || v < 0 || v >= n)
            parse_fail(line_no, "vertex index out of range");
        if (u == v) parse_fail(line_no, "self-loop");
        Edge e = make_edge(static_cast<int>(u), static_cast<int>(v));
        if (std::find(edges.begin(), edges.end(), e) != edges.end())
            parse_fail(line_no, "duplicate edge");
        edges.push_back(e);
        if (static_cast<long long>(edges.size()) > m) parse_fail(line_no, "more edges than declared");
    }
    if (n < 0) throw ParseError("line 1: missing 'pmc <n> <m>' header");
    if (static_cast<long long>(edges.size()) != m)
        throw ParseError("edge count does not match header");
    return Graph(static_cast<int>(n), std::move(edges));
}

Graph parse_graph6(std::string_view text) {
    // Standard graph6: N(n) then the upper triangle column-major, 6 bits per
    // printable byte offset by 63.
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.rfind(">>graph6<<", 0) == 0) s.erase(0, 10);
    if (s.empty()) throw ParseError("line 1: empty graph6 string");
    for (char c : s)
        if (c < 63 || c > 126) parse_fail(1, "invalid graph6 character");
    std::size_t pos = 0;
    long long n;
    if (s[0] != '~') {
        n = s[0] - 63;
        pos = 1;
    } else {
        if (s.size() >= 2 && s[1] == '~')
            parse_fail(1, "graph6 long-long form (n > 258047) not supported");
        if (s.size() < 4) parse_fail(1, "truncated graph6 header");
        n = 0;
        for (int i = 1; i <= 3; ++i) n = (n << 6) | (s[i] - 63);
        pos = 4;
    }
    long long bits_needed = n * (n - 1) / 2;
    long long bytes_needed = (bits_needed + 5) / 6;
    if (static_cast<long long>(s.size() - pos) != bytes_needed)
        parse_fail(1, "graph6 body length mismatch");
    std::vector<Edge> edges;
    long long bit = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u, ++bit) {
            int byte = s[pos + bit / 6] - 63;
            if ((byte >> (5 - bit % 6)) & 1) edges.emplace_back(u, v);
        }
    }
    // Padding bits must be zero.
    for (; bit < bytes_needed * 6; ++bit) {
        int byte = s[pos + bit / 6] - 63;
        if ((byte >> (5 - bit % 6)) & 1) parse_fail(1, "nonzero graph6 padding");
    }
    return Graph(static_cast<int>(n), std::move(edges));
}

Graph parse_graph(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        if (line[first] == '#' || line.compare(first, 3, "pmc") == 0)
            return parse_edge_list(text);
        return parse_graph6(text);
    }
    throw ParseError("line 1: empty input");
}

namespace {

std::string to_graph6(const Graph& g) {
    int n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    } else {
        throw InputError("graph6 output supports at most 258047 vertices");
    }
    int acc = 0, nbits = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            acc = (acc << 1) | (g.has_edge(u, v) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
    return out;
}

} // namespace

std::string serialize(const Graph& g, GraphFormat format) {
    std::ostringstream out;
    switch (format) {
        case GraphFormat::edgelist:
            out << "pmc " << g.vertex_count() << ' ' << g.edge_count() << '\n';
            for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
            return out.str();
        case GraphFormat::graph6:
            return to_graph6(g);
        case GraphFormat::dot:
            out << "graph g {\n";
            for (int v = 0; v < g.vertex_count(); ++v) out << "  " << v << ";\n";
            for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
            out << "}\n";
            return out.str();
    }
    throw InputError("unknown format");
}

} // namespace pmc
