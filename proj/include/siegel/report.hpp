#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "siegel/irrep_table.hpp"
#include "siegel/newform_bounds.hpp"

namespace siegel {

/// Version stamped into every JSON document; bump with docs/schemas.
inline constexpr int kSchemaVersion = 1;

// Big integers are written as decimal strings so no JSON reader rounds them.
nlohmann::json rational_json(const ExactRational& r);
nlohmann::json bounds_json(const BoundPair& b);
nlohmann::json decomposition_json(const Decomposition& d);
nlohmann::json analysis_json(const AnalysisReport& report);
nlohmann::json irreps_json(std::uint64_t p);

std::string analysis_text(const AnalysisReport& report);
/// "c14=1 c15=2"; the empty decomposition renders as "0".
std::string decomposition_text(const Decomposition& d);

}  // namespace siegel
