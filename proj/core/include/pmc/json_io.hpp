#pragma once

#include <string>

#include "json.hpp"

#include "pmc/dispatch.hpp"
#include "pmc/reductions.hpp"

namespace pmc {

nlohmann::json class_report_json(const ClassReport& r);
nlohmann::json certificate_json(const PmcCertificate& cert);
nlohmann::json decision_json(const Graph& g, const SolveOutcome& outcome,
                             bool emit_certificate);
nlohmann::json reduction_map_json(const ReductionMap& rm);

/// One "u v" line per pair.
std::string matching_to_text(const Matching& m);
/// Accepts the text format or a JSON array of [u, v] pairs.
Matching parse_matching(const Graph& g, std::string_view text);

} // namespace pmc
