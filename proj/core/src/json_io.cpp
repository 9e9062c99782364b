#include "pmc/json_io.hpp"

#include <sstream>

namespace pmc {

using nlohmann::json;

namespace {

json edge_array(const std::vector<Edge>& edges) {
    json arr = json::array();
    for (auto [u, v] : edges) arr.push_back({u, v});
    return arr;
}

json set_array(const VertexSet& s) {
    json arr = json::array();
    for (auto v = s.find_first(); v != VertexSet::npos; v = s.find_next(v))
        arr.push_back(static_cast<int>(v));
    return arr;
}

} // namespace

json class_report_json(const ClassReport& r) {
    json j;
    j["connected"] = r.connected;
    j["bipartite"] = r.bipartition.has_value();
    j["diameter"] = r.diameter == kInfinity ? json("infinity") : json(r.diameter);
    j["girth"] = r.girth == kInfinity ? json("infinity") : json(r.girth);
    j["min_degree"] = r.min_degree;
    j["max_degree"] = r.max_degree;
    j["claw_free"] = r.claw_free;
    j["p5_free"] = r.p5_free;
    j["cubic"] = r.cubic;
    j["bridges"] = edge_array(r.bridges);
    switch (r.planar_hint) {
        case PlanarHint::verified_planar: j["planar_hint"] = "verified-planar"; break;
        case PlanarHint::verified_nonplanar: j["planar_hint"] = "verified-nonplanar"; break;
        case PlanarHint::unknown: j["planar_hint"] = "unknown"; break;
    }
    return j;
}

json certificate_json(const PmcCertificate& cert) {
    json j;
    j["matching"] = edge_array(cert.matching.pairs);
    j["partition_X"] = set_array(cert.partition_x);
    return j;
}

json decision_json(const Graph& g, const SolveOutcome& outcome, bool emit_certificate) {
    const Decision& d = outcome.decision;
    json j;
    j["answer"] = d.yes ? "yes" : "no";
    j["solver"] = d.solver_id;
    j["n"] = g.vertex_count();
    j["m"] = g.edge_count();
    j["class_report"] = class_report_json(outcome.report);
    if (emit_certificate && d.certificate) j["certificate"] = certificate_json(*d.certificate);
    json counters = json::object();
    for (const auto& [k, v] : d.stats.counters) counters[k] = v;
    j["stats"] = {{"counters", counters}, {"seconds", d.stats.seconds}};
    return j;
}

json reduction_map_json(const ReductionMap& rm) {
    json j;
    j["kind"] = rm.kind == ReductionKind::diam3 ? "diam3" : "bipdiam4";
    j["source_n"] = rm.source.vertex_count();
    j["target_n"] = rm.target.vertex_count();
    json vm = json::array();
    for (int i = 0; i < rm.source.vertex_count(); ++i) {
        json entry;
        entry["source"] = i;
        entry["copies"] = {rm.copy_vertex(1, i), rm.copy_vertex(2, i)};
        auto [b1, e1] = rm.block_range(1, i);
        auto [b2, e2] = rm.block_range(2, i);
        entry["block_copy1"] = {b1, e1};
        entry["block_copy2"] = {b2, e2};
        vm.push_back(std::move(entry));
    }
    j["vertex_map"] = std::move(vm);
    json conns = json::array();
    for (const auto& [key, pe] : rm.connectors) {
        json entry;
        entry["pair"] = {key.first, key.second};
        entry["edges"] = {{pe.first.first, pe.first.second}, {pe.second.first, pe.second.second}};
        conns.push_back(std::move(entry));
    }
    j["connectors"] = std::move(conns);
    return j;
}

std::string matching_to_text(const Matching& m) {
    std::ostringstream out;
    for (auto [u, v] : m.pairs) out << u << ' ' << v << '\n';
    return out.str();
}

Matching parse_matching(const Graph& g, std::string_view text) {
    auto first = text.find_first_not_of(" \t\r\n");
    std::vector<Edge> pairs;
    if (first != std::string_view::npos && text[first] == '[') {
        json arr = json::parse(text);
        for (const auto& e : arr) {
            if (!e.is_array() || e.size() != 2) throw ParseError("expected [u, v] pairs");
            pairs.push_back(make_edge(e[0].get<int>(), e[1].get<int>()));
        }
    } else {
        std::istringstream in{std::string(text)};
        std::string line;
        int line_no = 0;
        while (std::getline(in, line)) {
            ++line_no;
            auto pos = line.find_first_not_of(" \t\r");
            if (pos == std::string::npos || line[pos] == '#') continue;
            std::istringstream fields(line);
            int u, v;
            fields >> u >> v;
            if (fields.fail())
                throw ParseError("line " + std::to_string(line_no) + ": expected '<u> <v>'");
            pairs.push_back(make_edge(u, v));
        }
    }
    return Matching::from_pairs(g, std::move(pairs));
}

} // namespace pmc
