#pragma once

#include <json.hpp>

#include "root_enclose/analysis.hpp"
#include "root_enclose/solver.hpp"

// JSON forms of analysis and solver results. Rationals are always strings.
// Schemas are documented in docs/json-schemas.md.
namespace root_enclose {

nlohmann::json to_json(const Interval& interval);
nlohmann::json to_json(const RefinedPair& pair);
nlohmann::json to_json(const Witness& witness);
nlohmann::json to_json(const Verdict& verdict);
nlohmann::json to_json(const CanonicalReport& report);
/// equality_points are truncated to `max_points` (the full count is always reported).
nlohmann::json to_json(const DominanceStats& stats, std::size_t max_points = 20);
nlohmann::json to_json(const EqualityLocus& locus);
nlohmann::json to_json(const RefineTrace& trace, bool include_intervals);
nlohmann::json to_json(const FloatTrace& trace);

}  // namespace root_enclose
