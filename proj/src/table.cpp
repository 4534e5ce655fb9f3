#include "siegel/table.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "siegel/error.hpp"
#include "siegel/report.hpp"

namespace siegel {

namespace {

struct Row {
  int weight;
  std::uint64_t level;
  DimValue dim;
};

int minimum_weight(GroupFamily family) {
  switch (family) {
    case GroupFamily::Gamma0: return 1;
    case GroupFamily::Paramodular: return 4;
    case GroupFamily::FullLevel:
    case GroupFamily::Principal: break;
  }
  return 4;
}

void validate(const TableSpec& spec) {
  if (spec.weights.empty()) throw Error(ErrorKind::InvalidArgument, "empty weight range");
  const int lowest = *std::min_element(spec.weights.begin(), spec.weights.end());
  if (lowest < minimum_weight(spec.family)) {
    throw Error(ErrorKind::WeightOutOfRange, "weight " + std::to_string(lowest) + " is below the minimum " +
                                                 std::to_string(minimum_weight(spec.family)) + " for " +
                                                 std::string(to_string(spec.family)));
  }
  if (spec.family == GroupFamily::FullLevel) {
    if (!spec.levels.empty()) throw Error(ErrorKind::InvalidArgument, "the full-level family takes no level");
    return;
  }
  if (spec.levels.empty()) throw Error(ErrorKind::InvalidArgument, "empty level range");
  if (spec.levels.size() > 1 && spec.weights.size() > 1) {
    throw Error(ErrorKind::InvalidArgument, "vary either the weight or the level, not both");
  }
}

// Rows vary over levels when more than one level was given.
bool by_level(const TableSpec& spec) { return spec.levels.size() > 1; }

std::string key_name(const TableSpec& spec) {
  if (!by_level(spec)) return "k";
  const bool all_prime = std::all_of(spec.levels.begin(), spec.levels.end(), [](auto n) { return is_prime(n); });
  return all_prime ? "p" : "N";
}

std::string latex_group(GroupFamily family, const std::string& level) {
  switch (family) {
    case GroupFamily::FullLevel: return "\\Gamma";
    case GroupFamily::Gamma0: return "\\Gamma_0(" + level + ")";
    case GroupFamily::Paramodular: return "K(" + level + ")";
    case GroupFamily::Principal: return "\\Gamma(" + level + ")";
  }
  return "";
}

std::string render_text(const TableSpec& spec, const std::vector<Row>& rows) {
  const std::string key = key_name(spec);
  std::size_t key_width = key.size();
  std::size_t dim_width = 3;
  for (const Row& r : rows) {
    key_width = std::max(key_width, (by_level(spec) ? std::to_string(r.level) : std::to_string(r.weight)).size());
    dim_width = std::max(dim_width, r.dim.to_string().size());
  }
  std::ostringstream os;
  auto line = [&](const std::string& a, const std::string& b) {
    os << std::string(key_width - a.size(), ' ') << a << "  " << std::string(dim_width - b.size(), ' ') << b << "\n";
  };
  line(key, "dim");
  for (const Row& r : rows) line(by_level(spec) ? std::to_string(r.level) : std::to_string(r.weight), r.dim.to_string());
  return os.str();
}

std::string render_csv(const TableSpec& spec, const std::vector<Row>& rows) {
  std::ostringstream os;
  os << key_name(spec) << ",dim\n";
  for (const Row& r : rows) {
    os << (by_level(spec) ? std::to_string(r.level) : std::to_string(r.weight)) << "," << r.dim.to_string() << "\n";
  }
  return os.str();
}

std::string render_json(const TableSpec& spec, const std::vector<Row>& rows) {
  nlohmann::json out = nlohmann::json::array();
  for (const Row& r : rows) {
    nlohmann::json row = {
        {"schema_version", kSchemaVersion},
        {"family", std::string(to_string(spec.family))},
        {"weight", r.weight},
        {"dim", r.dim.to_string()},
    };
    if (spec.family != GroupFamily::FullLevel) row["level"] = r.level;
    out.push_back(row);
  }
  return out.dump(2) + "\n";
}

// Horizontal layout: one row of keys, one row of dimensions.
std::string render_latex(const TableSpec& spec, const std::vector<Row>& rows) {
  const std::string key = key_name(spec);
  const std::string weight = by_level(spec) ? std::to_string(spec.weights.front()) : "k";
  std::string level;
  if (spec.family != GroupFamily::FullLevel) level = by_level(spec) ? key : std::to_string(spec.levels.front());

  std::ostringstream os;
  os << "\\begin{tabular}{|c||" ;
  for (std::size_t i = 0; i < rows.size(); ++i) os << "c|";
  os << "}\n\\hline\n$" << key << "$";
  for (const Row& r : rows) os << " & " << (by_level(spec) ? std::to_string(r.level) : std::to_string(r.weight));
  os << "\\\\\n\\hline\n\\hline\n";
  os << "${\\rm dim}\\, \\mathcal{S}_{" << weight << "}(" << latex_group(spec.family, level) << ")$";
  for (const Row& r : rows) os << " & " << r.dim.to_string();
  os << "\\\\\n\\hline\n\\end{tabular}\n";
  return os.str();
}

}  // namespace

OutputFormat parse_output_format(std::string_view name) {
  if (name == "text") return OutputFormat::Text;
  if (name == "csv") return OutputFormat::Csv;
  if (name == "json") return OutputFormat::Json;
  if (name == "latex") return OutputFormat::Latex;
  throw Error(ErrorKind::InvalidArgument, "unknown format '" + std::string(name) + "'");
}

DimValue family_dimension(GroupFamily family, Weight k, std::uint64_t level) {
  switch (family) {
    case GroupFamily::FullLevel:
      return dim_full_level(k);
    case GroupFamily::Gamma0:
      return dim_gamma0(k, level);
    case GroupFamily::Paramodular:
      if (k.value() != 4) {
        throw Error(ErrorKind::NotTabulated,
                    "paramodular dimensions are available only at weight 4; see docs/provenance.md");
      }
      return dim_paramodular_weight4(level);
    case GroupFamily::Principal:
      if (is_prime(level)) return dim_principal_prime(k, level);
      return dim_principal(k, parse_square_free_level(level));
  }
  throw Error(ErrorKind::InvalidArgument, "unknown family");
}

std::string emit_table(const TableSpec& spec) {
  validate(spec);
  std::vector<Row> rows;
  if (by_level(spec)) {
    for (std::uint64_t n : spec.levels) {
      rows.push_back({spec.weights.front(), n, family_dimension(spec.family, Weight(spec.weights.front()), n)});
    }
  } else {
    const std::uint64_t n = spec.levels.empty() ? 0 : spec.levels.front();
    for (int k : spec.weights) rows.push_back({k, n, family_dimension(spec.family, Weight(k), n)});
  }
  switch (spec.format) {
    case OutputFormat::Text: return render_text(spec, rows);
    case OutputFormat::Csv: return render_csv(spec, rows);
    case OutputFormat::Json: return render_json(spec, rows);
    case OutputFormat::Latex: return render_latex(spec, rows);
  }
  return {};
}

}  // namespace siegel
