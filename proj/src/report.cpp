#include "siegel/report.hpp"

#include <sstream>

namespace siegel {

using nlohmann::json;

json rational_json(const ExactRational& r) {
  return {{"numerator", r.numerator().get_str()}, {"denominator", r.denominator().get_str()}};
}

json bounds_json(const BoundPair& b) { return {{"lower", rational_json(b.lower)}, {"upper", rational_json(b.upper)}}; }

json decomposition_json(const Decomposition& d) {
  json nonzero = json::object();
  for (std::size_t i = 0; i < d.multiplicities().size(); ++i) {
    if (d.multiplicities()[i] != 0) nonzero[std::to_string(i + 1)] = d.multiplicities()[i];
  }
  return {{"multiplicities", d.multiplicities()}, {"nonzero", nonzero}, {"total", d.total().get_str()}};
}

json analysis_json(const AnalysisReport& report) {
  json solutions = json::array();
  for (const Decomposition& d : report.solutions) solutions.push_back(decomposition_json(d));

  json doc = {
      {"schema_version", kSchemaVersion},
      {"weight", report.weight},
      {"prime", report.prime},
      {"dimension", report.dimension.to_string()},
      {"lower_bound", rational_json(report.bounds.lower)},
      {"upper_bound", rational_json(report.bounds.upper)},
      {"solution_count", report.solution_count ? json(report.solution_count->get_str()) : json(nullptr)},
      {"solutions_omitted", report.solutions_omitted},
      {"solutions", solutions},
  };
  if (report.newform_dimension) doc["newform_dimension"] = report.newform_dimension->get_str();
  if (report.conclusion) doc["conclusion"] = *report.conclusion;
  if (report.local_component) {
    const LocalComponentAnalysis& local = *report.local_component;
    json component = {
        {"candidates", local.candidates},
        {"gamma0_dimension", local.gamma0_dimension.to_string()},
        {"paramodular_dimension", local.paramodular_dimension.to_string()},
        {"saito_kurokawa", local.saito_kurokawa},
    };
    component["identified"] = local.identified.empty() ? json(nullptr) : json(local.identified);
    doc["local_component"] = component;
  }
  return doc;
}

json irreps_json(std::uint64_t p) {
  json rows = json::array();
  for (const IrrepEntry& e : irrep_table()) {
    rows.push_back({
        {"index", e.index},
        {"formula", std::string(e.formula)},
        {"value", e.dim_at(p).to_string()},
        {"unitary", e.unitary_relevant},
    });
  }
  return {{"schema_version", kSchemaVersion}, {"prime", p}, {"irreps", rows}};
}

std::string decomposition_text(const Decomposition& d) {
  std::string out;
  for (std::size_t i = 0; i < d.multiplicities().size(); ++i) {
    if (d.multiplicities()[i] == 0) continue;
    if (!out.empty()) out += ' ';
    out += "c" + std::to_string(i + 1) + "=" + std::to_string(d.multiplicities()[i]);
  }
  return out.empty() ? "0" : out;
}

std::string analysis_text(const AnalysisReport& report) {
  std::ostringstream os;
  os << "weight " << report.weight << ", level " << report.prime << "\n";
  os << "dim S_k(Gamma(p)) = " << report.dimension.to_string() << "\n";
  os << "newform bounds: " << report.bounds.lower << " <= dim S_k^new <= " << report.bounds.upper << "\n";
  os << "decompositions: " << (report.solution_count ? report.solution_count->get_str() : std::string("unknown"));
  if (report.solutions_omitted) os << " (list omitted, above the enumeration cap)";
  os << "\n";
  for (const Decomposition& d : report.solutions) os << "  " << decomposition_text(d) << "\n";
  if (report.newform_dimension) os << "newform dimension: " << report.newform_dimension->get_str() << "\n";
  if (report.conclusion) os << *report.conclusion << "\n";
  if (report.local_component) {
    const LocalComponentAnalysis& local = *report.local_component;
    os << "local component candidates:";
    for (const std::string& c : local.candidates) os << " " << c << ";";
    os << "\n";
    os << "dim S_4(Gamma_0(p)) = " << local.gamma0_dimension.to_string()
       << ", dim S_4(K(p)) = " << local.paramodular_dimension.to_string() << "\n";
    if (!local.identified.empty()) {
      os << "local component: " << local.identified;
      if (local.saito_kurokawa) os << ", a Saito-Kurokawa lifting";
      os << "\n";
      if (local.saito_kurokawa) {
        os << "all cusp forms of weight " << report.weight << ", level " << report.prime
           << " are Saito-Kurokawa lifts\n";
      }
    }
  }
  return os.str();
}

}  // namespace siegel
