// pmc: exact deciders, oracles, recognizers and instance generators for the
// perfect matching-cut problem.

#include <chrono>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "pmc/dispatch.hpp"
#include "pmc/generators.hpp"
#include "pmc/json_io.hpp"
#include "pmc/reductions.hpp"

namespace {

using nlohmann::json;

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw pmc::InputError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void spill(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw pmc::InputError("cannot open '" + path + "' for writing");
    out << text;
}

pmc::Graph load_graph(const std::string& path, const std::string& format) {
    std::string text = slurp(path);
    if (format == "edgelist") return pmc::parse_edge_list(text);
    if (format == "graph6") return pmc::parse_graph6(text);
    return pmc::parse_graph(text);
}

struct SolveCli {
    std::vector<std::string> files{"-"};
    std::string format = "auto";
    std::string solver = "auto";
    std::string td_file;
    std::string output = "human";
    bool assume_planar = false;
    bool emit_certificate = false;
    bool batch = false;
    int oracle_cap = 26;
    int threads = 1;
    int width_cap = 10;
    int branch_budget = 1 << 10;
};

pmc::SolverChoice parse_solver(const std::string& name) {
    if (name == "auto") return pmc::SolverChoice::automatic;
    if (name == "diam2") return pmc::SolverChoice::diam2;
    if (name == "bipdiam3") return pmc::SolverChoice::bipdiam3;
    if (name == "p5free") return pmc::SolverChoice::p5free;
    if (name == "clawfree") return pmc::SolverChoice::clawfree;
    if (name == "treewidth") return pmc::SolverChoice::treewidth;
    if (name == "cubic") return pmc::SolverChoice::cubic;
    if (name == "oracle") return pmc::SolverChoice::oracle;
    throw pmc::InputError("unknown solver '" + name + "'");
}

std::string render_outcome(const pmc::Graph& g, const pmc::SolveOutcome& outcome,
                           const SolveCli& cli) {
    if (cli.output == "json")
        return pmc::decision_json(g, outcome, cli.emit_certificate).dump(2) + "\n";
    std::ostringstream out;
    const auto& d = outcome.decision;
    out << (d.yes ? "yes" : "no") << " (solver: " << d.solver_id << ", n=" << g.vertex_count()
        << ", m=" << g.edge_count() << ", " << d.stats.seconds << "s)\n";
    if (d.yes && !d.certificate) out << "note: certificate unavailable at this size\n";
    if (cli.emit_certificate && d.certificate) {
        out << "matching:\n" << pmc::matching_to_text(d.certificate->matching);
        out << "partition_X:";
        const auto& x = d.certificate->partition_x;
        for (auto v = x.find_first(); v != pmc::VertexSet::npos; v = x.find_next(v))
            out << ' ' << v;
        out << '\n';
    }
    return out.str();
}

std::string solve_one(const std::string& file, const SolveCli& cli) {
    pmc::Graph g = load_graph(file, cli.format);
    pmc::SolveRequest req;
    req.solver = parse_solver(cli.solver);
    req.assume_planar = cli.assume_planar;
    req.oracle_cap = cli.oracle_cap;
    req.oracle_threads = cli.threads;
    req.width_cap = cli.width_cap;
    req.branch_budget = cli.branch_budget;
    if (!cli.td_file.empty()) {
        req.td = pmc::parse_td(slurp(cli.td_file));
        if (req.solver == pmc::SolverChoice::automatic) req.solver = pmc::SolverChoice::treewidth;
    }
    auto t0 = std::chrono::steady_clock::now();
    pmc::SolveOutcome outcome = pmc::dispatch(g, req);
    outcome.decision.stats.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return render_outcome(g, outcome, cli);
}

int run(int argc, char** argv) {
    CLI::App app{"exact perfect matching-cut toolkit"};
    app.require_subcommand(1);

    SolveCli scli;
    auto* solve = app.add_subcommand("solve", "decide whether a graph has a perfect matching-cut");
    solve->add_option("files", scli.files, "graph file(s), '-' for stdin");
    solve->add_option("--format", scli.format, "auto|edgelist|graph6")
        ->check(CLI::IsMember({"auto", "edgelist", "graph6"}));
    solve->add_option("--solver", scli.solver,
                      "auto|diam2|bipdiam3|p5free|clawfree|treewidth|cubic|oracle")
        ->check(CLI::IsMember(
            {"auto", "diam2", "bipdiam3", "p5free", "clawfree", "treewidth", "cubic", "oracle"}));
    solve->add_option("--td", scli.td_file, "tree decomposition (.td, PACE format)");
    solve->add_flag("--assume-planar", scli.assume_planar,
                    "caller asserts planarity for the cubic rule");
    solve->add_flag("--emit-certificate", scli.emit_certificate, "include the certificate");
    solve->add_flag("--each", scli.batch, "treat every file independently (batch mode)");
    solve->add_option("--oracle-cap", scli.oracle_cap, "oracle size cap");
    solve->add_option("--threads", scli.threads, "oracle worker threads");
    solve->add_option("--width-cap", scli.width_cap, "max heuristic decomposition width");
    solve->add_option("--branch-budget", scli.branch_budget, "diam2 block branch budget");
    solve->add_option("--output", scli.output, "human|json")
        ->check(CLI::IsMember({"human", "json"}));

    SolveCli ocli;
    bool mc_mode = false;
    auto* oracle = app.add_subcommand("oracle", "exhaustive ground-truth decision");
    oracle->add_option("files", ocli.files, "graph file(s)");
    oracle->add_option("--format", ocli.format, "auto|edgelist|graph6");
    oracle->add_flag("--matching-cut", mc_mode, "decide matching-cut instead");
    oracle->add_option("--cap", ocli.oracle_cap, "size cap");
    oracle->add_option("--threads", ocli.threads, "worker threads");
    oracle->add_flag("--emit-certificate", ocli.emit_certificate, "include the certificate");
    oracle->add_option("--output", ocli.output, "human|json")
        ->check(CLI::IsMember({"human", "json"}));

    std::string rec_file = "-", rec_format = "auto", rec_output = "json";
    auto* recognize = app.add_subcommand("recognize", "emit the class report");
    recognize->add_option("file", rec_file, "graph file");
    recognize->add_option("--format", rec_format, "auto|edgelist|graph6");
    recognize->add_option("--output", rec_output, "human|json");

    std::string red_file = "-", red_target, red_out, red_map, red_format = "auto";
    auto* reduce = app.add_subcommand("reduce", "build a hardness-construction target instance");
    reduce->add_option("file", red_file, "source graph");
    reduce->add_option("--format", red_format, "auto|edgelist|graph6");
    reduce->add_option("--target", red_target, "diam3|bipdiam4")
        ->required()
        ->check(CLI::IsMember({"diam3", "bipdiam4"}));
    reduce->add_option("-o,--out", red_out, "target edge-list file ('-' stdout)");
    reduce->add_option("--map", red_map, "JSON reduction-map sidecar file");

    std::string gen_family, gen_out, gen_format = "edgelist";
    std::vector<int> gen_args;
    double gen_p = 0.5;
    unsigned long long gen_seed = 1;
    auto* gen = app.add_subcommand("gen", "emit a named instance family");
    gen->add_option("family", gen_family,
                    "cycle|path|complete|k33|k23|k4|star|prism|cube|petersen|knn-minus-pm|"
                    "line-gnp|gnp|gnp-connected|gnp-diam2|gnp-bip-diam3|gnp-p5free|gnp-clawfree|"
                    "cubic-bridge")
        ->required();
    gen->add_option("args", gen_args, "integer parameters (sizes)");
    gen->add_option("--p", gen_p, "edge probability for random families");
    gen->add_option("--seed", gen_seed, "random seed");
    gen->add_option("-o,--out", gen_out, "output file ('-' stdout)");
    gen->add_option("--format", gen_format, "edgelist|graph6|dot");

    std::string ver_graph = "-", ver_matching, ver_format = "auto";
    auto* verify = app.add_subcommand("verify", "verify a perfect matching-cut certificate");
    verify->add_option("file", ver_graph, "graph file");
    verify->add_option("--format", ver_format, "auto|edgelist|graph6");
    verify->add_option("--matching", ver_matching, "matching file (.matching text or JSON array)")
        ->required();

    CLI11_PARSE(app, argc, argv);

    if (*solve) {
        if (scli.files.size() > 1 && !scli.batch)
            throw pmc::InputError("multiple files require --each");
        if (scli.batch) {
            std::vector<std::future<std::string>> results;
            for (const auto& f : scli.files)
                results.push_back(
                    std::async(std::launch::async, [&, f] { return solve_one(f, scli); }));
            for (auto& r : results) std::cout << r.get();
        } else {
            std::cout << solve_one(scli.files.front(), scli);
        }
        return 0;
    }
    if (*oracle) {
        for (const auto& f : ocli.files) {
            pmc::Graph g = load_graph(f, ocli.format);
            pmc::OracleOptions opts{ocli.oracle_cap, ocli.threads};
            auto t0 = std::chrono::steady_clock::now();
            pmc::Decision d = mc_mode ? pmc::oracle_matching_cut(g, opts) : pmc::oracle_pmc(g, opts);
            d.stats.seconds =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            pmc::SolveOutcome outcome{std::move(d), pmc::classify(g)};
            std::cout << render_outcome(g, outcome, ocli);
        }
        return 0;
    }
    if (*recognize) {
        pmc::Graph g = load_graph(rec_file, rec_format);
        json j = pmc::class_report_json(pmc::classify(g));
        if (rec_output == "json") {
            std::cout << j.dump(2) << '\n';
        } else {
            for (const auto& [k, v] : j.items()) std::cout << k << ": " << v.dump() << '\n';
        }
        return 0;
    }
    if (*reduce) {
        pmc::Graph g = load_graph(red_file, red_format);
        pmc::ReductionMap rm = [&] {
            if (red_target == "diam3") return pmc::reduce_diam3(g);
            auto sides = pmc::two_coloring(g);
            if (!sides) throw pmc::InputError("bipdiam4 needs a bipartite source");
            return pmc::reduce_bipdiam4(g, *sides);
        }();
        spill(red_out, pmc::serialize(rm.target, pmc::GraphFormat::edgelist));
        if (!red_map.empty()) spill(red_map, pmc::reduction_map_json(rm).dump(2) + "\n");
        return 0;
    }
    if (*gen) {
        pmc::Rng rng(gen_seed);
        auto arg = [&](std::size_t i, int fallback) {
            return i < gen_args.size() ? gen_args[i] : fallback;
        };
        pmc::Graph g = [&]() -> pmc::Graph {
            if (gen_family == "cycle") return pmc::cycle_graph(arg(0, 6));
            if (gen_family == "path") return pmc::path_graph(arg(0, 4));
            if (gen_family == "complete") return pmc::complete_graph(arg(0, 4));
            if (gen_family == "k4") return pmc::complete_graph(4);
            if (gen_family == "k33") return pmc::complete_bipartite(3, 3);
            if (gen_family == "k23") return pmc::complete_bipartite(2, 3);
            if (gen_family == "star") return pmc::star_graph(arg(0, 3));
            if (gen_family == "prism") return pmc::prism_graph();
            if (gen_family == "cube") return pmc::cube_graph();
            if (gen_family == "petersen") return pmc::petersen_graph();
            if (gen_family == "knn-minus-pm") return pmc::knn_minus_pm(arg(0, 4));
            if (gen_family == "line-gnp")
                return pmc::line_graph(pmc::random_connected(arg(0, 8), gen_p, rng));
            if (gen_family == "gnp") return pmc::gnp(arg(0, 8), gen_p, rng);
            if (gen_family == "gnp-connected") return pmc::random_connected(arg(0, 8), gen_p, rng);
            if (gen_family == "gnp-diam2") return pmc::random_connected_diam2(arg(0, 8), rng);
            if (gen_family == "gnp-bip-diam3")
                return pmc::random_bipartite_diam_le3(arg(0, 8), rng);
            if (gen_family == "gnp-p5free") return pmc::random_p5free(arg(0, 8), rng);
            if (gen_family == "gnp-clawfree") return pmc::random_clawfree(arg(0, 8), rng);
            if (gen_family == "cubic-bridge") return pmc::random_cubic_with_bridge(rng);
            throw pmc::InputError("unknown family '" + gen_family + "'");
        }();
        pmc::GraphFormat fmt = gen_format == "graph6"  ? pmc::GraphFormat::graph6
                               : gen_format == "dot"   ? pmc::GraphFormat::dot
                                                       : pmc::GraphFormat::edgelist;
        std::string text = pmc::serialize(g, fmt);
        if (fmt == pmc::GraphFormat::graph6) text += '\n';
        spill(gen_out, text);
        return 0;
    }
    if (*verify) {
        pmc::Graph g = load_graph(ver_graph, ver_format);
        pmc::Matching m = pmc::parse_matching(g, slurp(ver_matching));
        auto cert = pmc::verify_pmc(g, m);
        if (cert) {
            std::cout << "accepted\n" << pmc::certificate_json(*cert).dump(2) << '\n';
            return 0;
        }
        std::cout << "rejected: valid matching but not a perfect matching-cut\n";
        return 0;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const pmc::ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return 2;
    } catch (const pmc::InputError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return 2;
    } catch (const pmc::CapExceededError& e) {
        std::cerr << "cap exceeded: " << e.what() << '\n';
        return 3;
    } catch (const pmc::UnsupportedClassError& e) {
        std::cerr << "unsupported: " << e.what() << '\n';
        return 3;
    } catch (const pmc::WrongSolverError& e) {
        std::cerr << "wrong solver: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
