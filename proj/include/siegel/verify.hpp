#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "siegel/dimension_formulas.hpp"

namespace siegel {

struct VerificationCheck {
  std::string name;      // stable identifier, e.g. "full_level.k=10"
  std::string source;    // which published table or statement the value comes from
  std::string expected;
  std::string computed;  // "error: ..." when the computation threw
  bool passed = false;
};

struct VerificationReport {
  std::vector<VerificationCheck> checks;

  bool passed() const;
  std::size_t failure_count() const;
  nlohmann::json to_json() const;
  std::string to_text() const;
};

/// Recomputes every published dimension, bound and decomposition and
/// compares it with the printed value. Never throws; failures are reported.
/// The coefficient override exists for fault-injection tests.
VerificationReport verify_published_values(
    const FullLevelCoefficients& full_level = FullLevelCoefficients::published());

}  // namespace siegel
