#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "siegel/dim_value.hpp"
#include "siegel/dimension_formulas.hpp"

namespace siegel {

enum class OutputFormat { Text, Csv, Json, Latex };

OutputFormat parse_output_format(std::string_view name);

/// dim S_k for one family member. `level` is ignored for FullLevel; for
/// Principal a prime level uses the prime formula and any other level must be
/// odd and square-free. Paramodular values exist only at weight 4.
DimValue family_dimension(GroupFamily family, Weight k, std::uint64_t level);

/// A table varies exactly one of weight or level; the other has one entry.
/// FullLevel tables leave `levels` empty.
struct TableSpec {
  GroupFamily family = GroupFamily::FullLevel;
  std::vector<int> weights;
  std::vector<std::uint64_t> levels;
  OutputFormat format = OutputFormat::Text;
};

/// Throws InvalidArgument for empty or ill-shaped ranges and propagates
/// formula errors. Output depends only on `spec`.
std::string emit_table(const TableSpec& spec);

}  // namespace siegel
