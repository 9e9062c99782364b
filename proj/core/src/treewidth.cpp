#include "pmc/treewidth.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "pmc/classify.hpp"

namespace pmc {

int TreeDecomposition::width() const {
    std::size_t w = 0;
    for (const auto& b : bags) w = std::max(w, b.count());
    return static_cast<int>(w) - 1;
}

TreeDecomposition parse_td(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    long long nbags = -1, max_bag = -1, n = -1;
    TreeDecomposition td;
    std::vector<bool> seen_bag;
    while (std::getline(in, line)) {
        ++line_no;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        if (line[first] == 'c') continue;
        std::istringstream fields(line);
        if (line[first] == 's') {
            std::string s, tdtag;
            fields >> s >> tdtag >> nbags >> max_bag >> n;
            if (s != "s" || tdtag != "td" || fields.fail() || nbags < 0 || max_bag < 0 || n < 0)
                throw ParseError("line " + std::to_string(line_no) +
                                 ": malformed header, expected 's td <bags> <max-bag-size> <n>'");
            td.bags.assign(nbags, VertexSet(n));
            seen_bag.assign(nbags, false);
            continue;
        }
        if (nbags < 0)
            throw ParseError("line " + std::to_string(line_no) + ": content before 's td' header");
        if (line[first] == 'b') {
            char tag;
            long long id;
            fields >> tag >> id;
            if (fields.fail() || id < 1 || id > nbags)
                throw ParseError("line " + std::to_string(line_no) + ": bad bag id");
            if (seen_bag[id - 1])
                throw ParseError("line " + std::to_string(line_no) + ": duplicate bag");
            seen_bag[id - 1] = true;
            long long v;
            while (fields >> v) {
                if (v < 1 || v > n)
                    throw ParseError("line " + std::to_string(line_no) +
                                     ": bag vertex out of range");
                td.bags[id - 1].set(v - 1);
            }
            if (static_cast<long long>(td.bags[id - 1].count()) > max_bag)
                throw ParseError("line " + std::to_string(line_no) + ": bag exceeds stated size");
            continue;
        }
        long long i, j;
        fields >> i >> j;
        if (fields.fail() || i < 1 || i > nbags || j < 1 || j > nbags || i == j)
            throw ParseError("line " + std::to_string(line_no) + ": bad bag-tree edge");
        td.tree_edges.emplace_back(static_cast<int>(i - 1), static_cast<int>(j - 1));
    }
    if (nbags < 0) throw ParseError("missing 's td' header");
    if (nbags >= 1 && static_cast<long long>(td.tree_edges.size()) != nbags - 1)
        throw ParseError("bag tree must have exactly <bags> - 1 edges");
    return td;
}

void validate_td(const Graph& g, const TreeDecomposition& td) {
    int n = g.vertex_count();
    int nb = static_cast<int>(td.bags.size());
    if (nb == 0) {
        if (n == 0) return;
        throw InputError("decomposition has no bags");
    }
    for (const auto& b : td.bags)
        if (static_cast<int>(b.size()) != n)
            throw InputError("bag universe does not match the graph");
    // Tree shape.
    std::vector<std::vector<int>> adj(nb);
    for (auto [i, j] : td.tree_edges) {
        adj[i].push_back(j);
        adj[j].push_back(i);
    }
    std::vector<int> seen(nb, 0);
    std::deque<int> queue{0};
    seen[0] = 1;
    int reached = 1;
    while (!queue.empty()) {
        int b = queue.front();
        queue.pop_front();
        for (int c : adj[b])
            if (!seen[c]) {
                seen[c] = 1;
                ++reached;
                queue.push_back(c);
            }
    }
    if (reached != nb) throw InputError("bag tree is disconnected");
    // Coverage.
    VertexSet all(n);
    for (const auto& b : td.bags) all |= b;
    if (!all.all()) throw InputError("some vertex lies in no bag");
    for (auto [u, v] : g.edges()) {
        bool covered = false;
        for (const auto& b : td.bags)
            if (b.test(u) && b.test(v)) {
                covered = true;
                break;
            }
        if (!covered)
            throw InputError("edge " + std::to_string(u) + "-" + std::to_string(v) +
                             " lies in no bag");
    }
    // Subtree condition per vertex.
    for (int v = 0; v < n; ++v) {
        int start = -1, count = 0;
        for (int b = 0; b < nb; ++b)
            if (td.bags[b].test(v)) {
                if (start == -1) start = b;
                ++count;
            }
        std::vector<int> mark(nb, 0);
        std::deque<int> q2{start};
        mark[start] = 1;
        int hit = 1;
        while (!q2.empty()) {
            int b = q2.front();
            q2.pop_front();
            for (int c : adj[b])
                if (!mark[c] && td.bags[c].test(v)) {
                    mark[c] = 1;
                    ++hit;
                    q2.push_back(c);
                }
        }
        if (hit != count)
            throw InputError("bags containing vertex " + std::to_string(v) +
                             " do not form a subtree");
    }
}

TreeDecomposition heuristic_td(const Graph& g) {
    int n = g.vertex_count();
    TreeDecomposition td;
    if (n == 0) return td;
    std::vector<std::set<int>> adj(n);
    for (auto [u, v] : g.edges()) {
        adj[u].insert(v);
        adj[v].insert(u);
    }
    std::vector<bool> gone(n, false);
    std::vector<int> order, position(n);
    std::vector<VertexSet> bags;
    for (int step = 0; step < n; ++step) {
        int best = -1;
        long long best_fill = -1;
        for (int v = 0; v < n; ++v) {
            if (gone[v]) continue;
            long long fill = 0;
            for (auto it = adj[v].begin(); it != adj[v].end(); ++it)
                for (auto jt = std::next(it); jt != adj[v].end(); ++jt)
                    if (!adj[*it].count(*jt)) ++fill;
            if (best == -1 || fill < best_fill) {
                best = v;
                best_fill = fill;
            }
        }
        VertexSet bag(n);
        bag.set(best);
        for (int w : adj[best]) bag.set(w);
        bags.push_back(std::move(bag));
        position[best] = step;
        order.push_back(best);
        for (int u : adj[best])
            for (int w : adj[best])
                if (u < w) {
                    adj[u].insert(w);
                    adj[w].insert(u);
                }
        for (int u : adj[best]) adj[u].erase(best);
        adj[best].clear();
        gone[best] = true;
    }
    td.bags = std::move(bags);
    // Connect each bag to the bag of its earliest-eliminated surviving
    // neighbor; the last bag is the root.
    for (int step = 0; step + 1 < n; ++step) {
        int v = order[step];
        int parent = -1;
        for (auto w = td.bags[step].find_first(); w != VertexSet::npos;
             w = td.bags[step].find_next(w)) {
            if (static_cast<int>(w) == v) continue;
            if (parent == -1 || position[w] < position[parent]) parent = static_cast<int>(w);
        }
        td.tree_edges.emplace_back(step, parent == -1 ? step + 1 : position[parent]);
    }
    validate_td(g, td);
    return td;
}

namespace {

// Nice-decomposition nodes, built bottom-up; children precede parents in the
// node list so a single forward pass is a post-order traversal.
struct NiceNode {
    enum class Kind { leaf, introduce, forget, introduce_edge, join } kind;
    std::vector<int> slots; // bag contents, ascending
    int vertex = -1;        // introduce/forget subject
    int u = -1, v = -1;     // introduce_edge subject
    int child = -1, child2 = -1;
};

class Nicifier {
  public:
    Nicifier(const Graph& g, const TreeDecomposition& td) : g_(g), td_(td) {
        adj_.resize(td.bags.size());
        for (auto [i, j] : td_.tree_edges) {
            adj_[i].push_back(j);
            adj_[j].push_back(i);
        }
        placed_ = std::vector<std::vector<bool>>(g.vertex_count(),
                                                 std::vector<bool>(g.vertex_count(), false));
    }

    std::vector<NiceNode> run() {
        int top = build(0, -1);
        // Forget everything left in the root bag.
        std::vector<int> slots = nodes_[top].slots;
        for (int i = static_cast<int>(slots.size()) - 1; i >= 0; --i)
            top = add_forget(top, slots[i]);
        root_ = top;
        return std::move(nodes_);
    }

    int root() const { return root_; }

  private:
    int add(NiceNode node) {
        nodes_.push_back(std::move(node));
        return static_cast<int>(nodes_.size()) - 1;
    }

    int add_forget(int child, int v) {
        NiceNode node;
        node.kind = NiceNode::Kind::forget;
        node.vertex = v;
        node.child = child;
        node.slots = nodes_[child].slots;
        node.slots.erase(std::find(node.slots.begin(), node.slots.end(), v));
        return add(std::move(node));
    }

    // Introduce v, then introduce every not-yet-placed edge between v and the
    // rest of the current bag.
    int add_introduce(int child, int v) {
        NiceNode node;
        node.kind = NiceNode::Kind::introduce;
        node.vertex = v;
        node.child = child;
        node.slots = nodes_[child].slots;
        node.slots.insert(std::upper_bound(node.slots.begin(), node.slots.end(), v), v);
        int cur = add(std::move(node));
        for (int u : nodes_[cur].slots) {
            if (u == v || !g_.has_edge(u, v) || placed_[u][v]) continue;
            placed_[u][v] = placed_[v][u] = true;
            NiceNode enode;
            enode.kind = NiceNode::Kind::introduce_edge;
            enode.u = std::min(u, v);
            enode.v = std::max(u, v);
            enode.child = cur;
            enode.slots = nodes_[cur].slots;
            cur = add(std::move(enode));
        }
        return cur;
    }

    // Returns a node whose bag equals bag(original).
    int build(int original, int parent) {
        std::vector<int> target;
        const VertexSet& bag = td_.bags[original];
        for (auto v = bag.find_first(); v != VertexSet::npos; v = bag.find_next(v))
            target.push_back(static_cast<int>(v));

        std::vector<int> children;
        for (int c : adj_[original])
            if (c != parent) children.push_back(c);

        std::vector<int> branches;
        if (children.empty()) {
            NiceNode leaf;
            leaf.kind = NiceNode::Kind::leaf;
            int cur = add(std::move(leaf));
            for (int v : target) cur = add_introduce(cur, v);
            return cur;
        }
        for (int c : children) {
            int sub = build(c, original);
            // Shed what the parent bag lacks, then add what the child lacked.
            std::vector<int> drop;
            for (int v : nodes_[sub].slots)
                if (!bag.test(v)) drop.push_back(v);
            for (auto it = drop.rbegin(); it != drop.rend(); ++it)
                sub = add_forget(sub, *it);
            for (int v : target)
                if (std::find(nodes_[sub].slots.begin(), nodes_[sub].slots.end(), v) ==
                    nodes_[sub].slots.end())
                    sub = add_introduce(sub, v);
            branches.push_back(sub);
        }
        int cur = branches[0];
        for (std::size_t i = 1; i < branches.size(); ++i) {
            NiceNode join;
            join.kind = NiceNode::Kind::join;
            join.child = cur;
            join.child2 = branches[i];
            join.slots = nodes_[cur].slots;
            cur = add(std::move(join));
        }
        return cur;
    }

    const Graph& g_;
    const TreeDecomposition& td_;
    std::vector<std::vector<int>> adj_;
    std::vector<std::vector<bool>> placed_;
    std::vector<NiceNode> nodes_;
    int root_ = -1;
};

// A state packs, per bag slot, a side bit and a matched bit, plus two bits
// recording whether a forgotten vertex has landed on each side.
using StateKey = std::uint64_t;
constexpr int kMaxSlots = 25;

struct KeyCodec {
    int slots;
    StateKey side_of(StateKey k, int i) const { return (k >> i) & 1; }
    StateKey matched_of(StateKey k, int i) const { return (k >> (kMaxSlots + i)) & 1; }
    bool seen_x(StateKey k) const { return (k >> (2 * kMaxSlots)) & 1; }
    bool seen_y(StateKey k) const { return (k >> (2 * kMaxSlots + 1)) & 1; }
    StateKey sides(StateKey k) const { return k & ((StateKey(1) << slots) - 1); }
};

// Backtrace record: predecessor key(s) and what the transition decided.
struct BackRef {
    StateKey from = 0, from2 = 0;
    std::int8_t decision = 0; // introduce: side; introduce_edge: 1 if taken
};

using StateMap = std::map<StateKey, BackRef>;

StateKey insert_slot(const KeyCodec& c, StateKey k, int pos, StateKey side, StateKey matched) {
    StateKey low_mask = (StateKey(1) << pos) - 1;
    StateKey sides = c.sides(k);
    StateKey new_sides = (sides & low_mask) | (side << pos) | ((sides & ~low_mask) << 1);
    StateKey match_bits = (k >> kMaxSlots) & ((StateKey(1) << c.slots) - 1);
    StateKey new_match = (match_bits & low_mask) | (matched << pos) | ((match_bits & ~low_mask) << 1);
    StateKey seen = k >> (2 * kMaxSlots);
    return new_sides | (new_match << kMaxSlots) | (seen << (2 * kMaxSlots));
}

StateKey remove_slot(int slots, StateKey k, int pos) {
    StateKey low_mask = (StateKey(1) << pos) - 1;
    StateKey sides = k & ((StateKey(1) << slots) - 1);
    StateKey new_sides = (sides & low_mask) | ((sides >> 1) & ~low_mask);
    StateKey match_bits = (k >> kMaxSlots) & ((StateKey(1) << slots) - 1);
    StateKey new_match = (match_bits & low_mask) | ((match_bits >> 1) & ~low_mask);
    StateKey seen = k >> (2 * kMaxSlots);
    return new_sides | (new_match << kMaxSlots) | (seen << (2 * kMaxSlots));
}

} // namespace

Decision solve_tw(const Graph& g, const TreeDecomposition& td) {
    validate_td(g, td);
    if (!is_connected(g)) throw InputError("solver requires a connected graph");
    SolveStats stats;
    int n = g.vertex_count();
    if (n < 2) return make_no_decision("treewidth", std::move(stats));
    if (td.width() + 1 > kMaxSlots)
        throw CapExceededError("bag size beyond the DP packing limit");

    Nicifier nicifier(g, td);
    std::vector<NiceNode> nodes = nicifier.run();
    int root = nicifier.root();
    stats.bump("nice_nodes", static_cast<std::int64_t>(nodes.size()));

    std::vector<StateMap> dp(nodes.size());
    for (std::size_t ni = 0; ni < nodes.size(); ++ni) {
        const NiceNode& node = nodes[ni];
        KeyCodec codec{static_cast<int>(node.slots.size())};
        StateMap& out = dp[ni];
        switch (node.kind) {
            case NiceNode::Kind::leaf:
                out.emplace(0, BackRef{});
                break;
            case NiceNode::Kind::introduce: {
                int pos = static_cast<int>(std::lower_bound(node.slots.begin(), node.slots.end(),
                                                            node.vertex) -
                                           node.slots.begin());
                for (const auto& [k, unused] : dp[node.child]) {
                    (void)unused;
                    for (StateKey side = 0; side <= 1; ++side) {
                        StateKey nk = insert_slot(codec, k, pos, side, 0);
                        out.emplace(nk, BackRef{k, 0, static_cast<std::int8_t>(side)});
                    }
                }
                break;
            }
            case NiceNode::Kind::forget: {
                const auto& cslots = nodes[node.child].slots;
                KeyCodec ccodec{static_cast<int>(cslots.size())};
                int pos = static_cast<int>(std::lower_bound(cslots.begin(), cslots.end(),
                                                            node.vertex) -
                                           cslots.begin());
                for (const auto& [k, unused] : dp[node.child]) {
                    (void)unused;
                    if (!ccodec.matched_of(k, pos)) continue; // must leave matched
                    StateKey nk = remove_slot(ccodec.slots, k, pos);
                    StateKey seen_bit = ccodec.side_of(k, pos) == 0
                                            ? (StateKey(1) << (2 * kMaxSlots))
                                            : (StateKey(1) << (2 * kMaxSlots + 1));
                    nk |= seen_bit;
                    out.emplace(nk, BackRef{k, 0, 0});
                }
                break;
            }
            case NiceNode::Kind::introduce_edge: {
                int pu = static_cast<int>(std::lower_bound(node.slots.begin(), node.slots.end(),
                                                           node.u) -
                                          node.slots.begin());
                int pv = static_cast<int>(std::lower_bound(node.slots.begin(), node.slots.end(),
                                                           node.v) -
                                          node.slots.begin());
                for (const auto& [k, unused] : dp[node.child]) {
                    (void)unused;
                    bool same_side = codec.side_of(k, pu) == codec.side_of(k, pv);
                    bool u_matched = codec.matched_of(k, pu);
                    bool v_matched = codec.matched_of(k, pv);
                    if (same_side) {
                        out.emplace(k, BackRef{k, 0, 0}); // skip
                        if (!u_matched && !v_matched) {
                            StateKey nk = k | (StateKey(1) << (kMaxSlots + pu)) |
                                          (StateKey(1) << (kMaxSlots + pv));
                            out.emplace(nk, BackRef{k, 0, 1});
                        }
                    } else {
                        // Cross edges are cut edges and must be matched.
                        if (u_matched || v_matched) continue;
                        StateKey nk = k | (StateKey(1) << (kMaxSlots + pu)) |
                                      (StateKey(1) << (kMaxSlots + pv));
                        out.emplace(nk, BackRef{k, 0, 1});
                    }
                }
                break;
            }
            case NiceNode::Kind::join: {
                // Bucket by side assignment; matched sets must be disjoint.
                std::map<StateKey, std::vector<StateKey>> by_sides;
                for (const auto& [k2, unused] : dp[node.child2]) {
                    (void)unused;
                    by_sides[codec.sides(k2)].push_back(k2);
                }
                for (const auto& [k1, unused] : dp[node.child]) {
                    (void)unused;
                    auto it = by_sides.find(codec.sides(k1));
                    if (it == by_sides.end()) continue;
                    StateKey m1 = (k1 >> kMaxSlots) & ((StateKey(1) << codec.slots) - 1);
                    for (StateKey k2 : it->second) {
                        StateKey m2 = (k2 >> kMaxSlots) & ((StateKey(1) << codec.slots) - 1);
                        if (m1 & m2) continue;
                        StateKey nk = k1 | k2; // sides equal; matched/seen union
                        out.emplace(nk, BackRef{k1, k2, 0});
                    }
                }
                break;
            }
        }
        // States per bag stay within the 4^|bag| * 4 envelope.
        std::size_t bound = (std::size_t(1) << (2 * node.slots.size())) * 4;
        if (out.size() > bound)
            throw InternalInvariantError("state space exceeded its bound");
        stats.bump("dp_states", static_cast<std::int64_t>(out.size()));
    }

    // Root bag is empty: accept iff both sides were seen.
    StateKey accept = 0;
    bool found = false;
    for (const auto& [k, unused] : dp[root]) {
        (void)unused;
        KeyCodec codec{0};
        if (codec.seen_x(k) && codec.seen_y(k)) {
            accept = k;
            found = true;
            break;
        }
    }
    if (!found) return make_no_decision("treewidth", std::move(stats));

    // Backtrace: recover the matching; verification recomputes the partition.
    std::vector<Edge> pairs;
    std::function<void(int, StateKey)> walk = [&](int ni, StateKey key) {
        const NiceNode& node = nodes[ni];
        const BackRef& ref = dp[ni].at(key);
        switch (node.kind) {
            case NiceNode::Kind::leaf:
                return;
            case NiceNode::Kind::introduce:
                walk(node.child, ref.from);
                return;
            case NiceNode::Kind::forget:
                walk(node.child, ref.from);
                return;
            case NiceNode::Kind::introduce_edge:
                if (ref.decision) pairs.push_back(make_edge(node.u, node.v));
                walk(node.child, ref.from);
                return;
            case NiceNode::Kind::join:
                walk(node.child, ref.from);
                walk(node.child2, ref.from2);
                return;
        }
    };
    walk(root, accept);

    return make_yes_decision(g, Matching::from_pairs(g, std::move(pairs)), "treewidth",
                             std::move(stats));
}

} // namespace pmc
