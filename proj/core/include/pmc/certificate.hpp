#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "pmc/matching.hpp"

namespace pmc {

/// Witness that a graph has a perfect matching-cut: a perfect matching
/// together with a partition (X, V\X) whose edge-cut is nonempty and
/// contained in the matching.
struct PmcCertificate {
    Matching matching;
    VertexSet partition_x;
};

struct SolveStats {
    std::map<std::string, std::int64_t> counters;
    double seconds = 0.0;

    void bump(const std::string& key, std::int64_t by = 1) { counters[key] += by; }
};

struct Decision {
    bool yes = false;
    std::optional<PmcCertificate> certificate; // present on yes (one documented
                                               // exception: cubic bridgeless
                                               // beyond the oracle cap)
    std::string solver_id;
    SolveStats stats;
};

} // namespace pmc
