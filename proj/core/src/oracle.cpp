#include "pmc/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <thread>

#include "pmc/classify.hpp"

namespace pmc {

std::optional<PmcCertificate> verify_pmc(const Graph& g, const Matching& m) {
    // from_pairs re-validates edge membership and disjointness.
    Matching checked = Matching::from_pairs(g, m.pairs);
    if (!checked.is_perfect_on(g)) return std::nullopt;
    int n = g.vertex_count();
    if (n < 2) return std::nullopt;

    VertexSet in_matching(n);
    std::vector<int> partner(n, -1);
    for (auto [u, v] : checked.pairs) {
        partner[u] = v;
        partner[v] = u;
    }
    // Component of vertex 0 in g - m.
    VertexSet side_x(n);
    side_x.set(0);
    std::deque<int> queue{0};
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int w : g.neighbors(v)) {
            if (partner[v] == w || side_x.test(w)) continue;
            side_x.set(w);
            queue.push_back(w);
        }
    }
    if (static_cast<int>(side_x.count()) == n) return std::nullopt;
    return PmcCertificate{std::move(checked), std::move(side_x)};
}

namespace {

enum class SweepMode { pmc, matching_cut };

// DFS over side assignments for vertices 1..n-1 (vertex 0 is X). cross[v]
// counts cut edges at v among assigned vertices; any vertex reaching two
// kills the subtree, which is what makes the 2^(n-1) sweep usable.
class PartitionSweep {
  public:
    PartitionSweep(const Graph& g, SweepMode mode) : g_(g), n_(g.vertex_count()), mode_(mode) {}

    struct Result {
        bool found = false;
        VertexSet side_x;
        std::vector<Edge> cut;
        std::optional<Matching> completion;
        std::int64_t nodes = 0;
    };

    // prefix: forced sides for vertices 1..len (bit i-1 of pattern = vertex i in Y).
    Result run(int prefix_len, unsigned prefix_pattern, const std::atomic<bool>* stop) {
        Result res;
        side_.assign(n_, 0);
        cross_.assign(n_, 0);
        res.side_x = VertexSet(n_);
        stop_ = stop;
        dfs(1, prefix_len, prefix_pattern, res);
        return res;
    }

  private:
    bool place(int v, int s, Result&) {
        side_[v] = s;
        bool ok = true;
        for (int w : g_.neighbors(v)) {
            if (w > v) continue; // only vertices assigned so far
            if (side_[w] == s) continue;
            ++cross_[w];
            ++cross_[v];
            if (cross_[w] > 1 || cross_[v] > 1) ok = false;
        }
        return ok;
    }

    void unplace(int v) {
        for (int w : g_.neighbors(v)) {
            if (w > v) continue;
            if (side_[w] == side_[v]) continue;
            --cross_[w];
            --cross_[v];
        }
    }

    void dfs(int v, int prefix_len, unsigned prefix_pattern, Result& res) {
        if (res.found || (stop_ && stop_->load(std::memory_order_relaxed))) return;
        ++res.nodes;
        if (v == n_) {
            finish(res);
            return;
        }
        int forced = -1;
        if (v <= prefix_len) forced = (prefix_pattern >> (v - 1)) & 1;
        for (int s = 0; s <= 1; ++s) {
            if (forced != -1 && s != forced) continue;
            bool ok = place(v, s, res);
            if (ok) dfs(v + 1, prefix_len, prefix_pattern, res);
            unplace(v);
            if (res.found) return;
        }
    }

    void finish(Result& res) {
        // Every vertex assigned; cut is a matching by construction. Reject the
        // trivial partition; connectivity then guarantees a nonempty cut.
        bool has_y = false;
        for (int v = 1; v < n_; ++v)
            if (side_[v] == 1) {
                has_y = true;
                break;
            }
        if (!has_y) return;
        if (mode_ == SweepMode::matching_cut) {
            emit(res, std::nullopt);
            return;
        }
        VertexSet uncovered(n_);
        for (int v = 0; v < n_; ++v)
            if (cross_[v] == 0) uncovered.set(v);
        auto completion = pm_on_subset(g_, uncovered);
        if (!completion) return;
        emit(res, std::move(completion));
    }

    void emit(Result& res, std::optional<Matching> completion) {
        res.found = true;
        for (int v = 0; v < n_; ++v)
            if (side_[v] == 0) res.side_x.set(v);
        for (auto [u, v] : g_.edges())
            if (side_[u] != side_[v]) res.cut.push_back({u, v});
        res.completion = std::move(completion);
    }

    const Graph& g_;
    int n_;
    SweepMode mode_;
    std::vector<std::int8_t> side_;
    std::vector<int> cross_;
    const std::atomic<bool>* stop_ = nullptr;
};

PartitionSweep::Result sweep(const Graph& g, SweepMode mode, const OracleOptions& opts,
                             SolveStats& stats) {
    if (!is_connected(g)) throw InputError("oracle requires a connected graph");
    if (g.vertex_count() > opts.cap)
        throw CapExceededError("oracle cap " + std::to_string(opts.cap) + " exceeded (n = " +
                               std::to_string(g.vertex_count()) + ")");
    int n = g.vertex_count();
    if (n < 2) {
        PartitionSweep::Result res;
        res.side_x = VertexSet(n);
        return res;
    }
    int threads = std::max(1, opts.threads);
    if (threads == 1 || n <= 4) {
        auto res = PartitionSweep(g, mode).run(0, 0, nullptr);
        stats.bump("nodes_explored", res.nodes);
        return res;
    }
    int prefix_len = 1;
    while ((1 << prefix_len) < threads && prefix_len < n - 1) ++prefix_len;
    int jobs = 1 << prefix_len;
    std::vector<PartitionSweep::Result> results(jobs);
    std::atomic<bool> stop{false};
    std::atomic<int> next{0};
    auto worker = [&]() {
        for (;;) {
            int job = next.fetch_add(1);
            if (job >= jobs) return;
            PartitionSweep sweep_local(g, mode);
            results[job] = sweep_local.run(prefix_len, static_cast<unsigned>(job), &stop);
            if (results[job].found) stop.store(true, std::memory_order_relaxed);
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    // Lowest prefix wins so reruns with the same thread count agree.
    PartitionSweep::Result merged;
    for (auto& r : results) {
        stats.bump("nodes_explored", r.nodes);
        if (r.found && !merged.found) merged = std::move(r);
    }
    if (!merged.found && !results.empty()) merged.side_x = VertexSet(n);
    return merged;
}

} // namespace

Decision make_yes_decision(const Graph& g, const Matching& m, std::string solver_id,
                           SolveStats stats) {
    auto cert = verify_pmc(g, m);
    if (!cert)
        throw InternalInvariantError("solver '" + solver_id +
                                     "' produced a yes that fails verification");
    Decision d;
    d.yes = true;
    d.certificate = std::move(cert);
    d.solver_id = std::move(solver_id);
    d.stats = std::move(stats);
    return d;
}

Decision make_no_decision(std::string solver_id, SolveStats stats) {
    Decision d;
    d.yes = false;
    d.solver_id = std::move(solver_id);
    d.stats = std::move(stats);
    return d;
}

Decision oracle_pmc(const Graph& g, const OracleOptions& opts) {
    SolveStats stats;
    auto res = sweep(g, SweepMode::pmc, opts, stats);
    if (!res.found) return make_no_decision("oracle", std::move(stats));
    std::vector<Edge> pairs = res.cut;
    pairs.insert(pairs.end(), res.completion->pairs.begin(), res.completion->pairs.end());
    return make_yes_decision(g, Matching::from_pairs(g, std::move(pairs)), "oracle",
                             std::move(stats));
}

Decision oracle_matching_cut(const Graph& g, const OracleOptions& opts) {
    SolveStats stats;
    auto res = sweep(g, SweepMode::matching_cut, opts, stats);
    Decision d;
    d.yes = res.found;
    d.solver_id = "oracle-mc";
    d.stats = std::move(stats);
    return d;
}

std::optional<MatchingCutWitness> find_matching_cut(const Graph& g, const OracleOptions& opts) {
    SolveStats stats;
    auto res = sweep(g, SweepMode::matching_cut, opts, stats);
    if (!res.found) return std::nullopt;
    return MatchingCutWitness{std::move(res.cut), std::move(res.side_x)};
}

bool is_immune(const Graph& g, const VertexSet& s, const OracleOptions& opts) {
    auto [sub, to_parent] = induced(g, s);
    if (!is_connected(sub)) throw InputError("is_immune requires G[s] connected");
    return !oracle_matching_cut(sub, opts).yes;
}

} // namespace pmc
