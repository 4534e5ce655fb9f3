#include "siegel/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <optional>
#include <ostream>

#include <CLI11.hpp>

#include "siegel/dimension_formulas.hpp"
#include "siegel/error.hpp"
#include "siegel/irrep_table.hpp"
#include "siegel/newform_bounds.hpp"
#include "siegel/report.hpp"
#include "siegel/table.hpp"
#include "siegel/verify.hpp"

namespace siegel {

namespace {

constexpr const char* kUsage =
    "usage: siegel-dims <dim|table|bounds|decompose|analyze|irreps|verify>\n"
    "         [--family full|gamma0|paramodular|principal] [--weight K | --weights A..B]\n"
    "         [--level N | --levels L1,L2,...] [--prime P] [--target D]\n"
    "         [--include-nonunitary] [--envelope] [--format text|csv|json|latex]\n";

struct Options {
  std::optional<std::string> family;
  std::optional<int> weight;
  std::optional<std::string> weights;
  std::optional<std::uint64_t> level;
  std::vector<std::uint64_t> levels;
  std::optional<std::uint64_t> prime;
  std::optional<std::string> target;
  bool include_nonunitary = false;
  bool envelope = false;
  std::string format = "text";
};

Error usage_error(const std::string& message) { return Error(ErrorKind::InvalidArgument, message); }

int parse_int(std::string_view text, const char* what) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw usage_error(std::string("malformed ") + what + " '" + std::string(text) + "'");
  }
  return value;
}

std::vector<int> weight_list(const Options& o) {
  if (o.weight && o.weights) throw usage_error("give --weight or --weights, not both");
  if (o.weight) return {*o.weight};
  if (!o.weights) throw usage_error("--weight or --weights is required");
  const std::string& text = *o.weights;
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw usage_error("--weights expects A..B");
  const int first = parse_int(std::string_view(text).substr(0, dots), "weight range");
  const int last = parse_int(std::string_view(text).substr(dots + 2), "weight range");
  std::vector<int> out;
  for (int k = first; k <= last; ++k) out.push_back(k);
  return out;  // empty when first > last; emit_table rejects it
}

std::vector<std::uint64_t> level_list(const Options& o) {
  if (o.level && !o.levels.empty()) throw usage_error("give --level or --levels, not both");
  if (o.level) return {*o.level};
  return o.levels;
}

GroupFamily required_family(const Options& o) {
  if (!o.family) throw usage_error("--family is required");
  return parse_group_family(*o.family);
}

Weight single_weight(const Options& o) {
  if (!o.weight) throw usage_error("--weight is required");
  return Weight(*o.weight);
}

std::uint64_t required_prime(const Options& o) {
  if (!o.prime) throw usage_error("--prime is required");
  return *o.prime;
}

void reject_formats(const Options& o, std::initializer_list<const char*> allowed) {
  if (std::none_of(allowed.begin(), allowed.end(), [&](const char* f) { return o.format == f; })) {
    throw usage_error("format '" + o.format + "' is not available for this command");
  }
}

int cmd_dim(const Options& o, std::ostream& out) {
  const GroupFamily family = required_family(o);
  const Weight k = single_weight(o);
  std::uint64_t level = 0;
  if (family != GroupFamily::FullLevel) {
    if (!o.level) throw usage_error("--level is required for this family");
    level = *o.level;
  }
  out << family_dimension(family, k, level).to_string() << "\n";
  return 0;
}

int cmd_table(const Options& o, std::ostream& out) {
  TableSpec spec;
  spec.family = required_family(o);
  spec.weights = weight_list(o);
  spec.levels = level_list(o);
  spec.format = parse_output_format(o.format);
  out << emit_table(spec);
  return 0;
}

int cmd_bounds(const Options& o, std::ostream& out) {
  reject_formats(o, {"text", "json"});
  const Weight k = single_weight(o);
  if (o.prime.has_value() == o.level.has_value()) throw usage_error("bounds needs exactly one of --prime or --level");
  const BoundPair b = o.prime ? bounds_prime(k, *o.prime) : bounds_squarefree(k, parse_square_free_level(*o.level));
  if (o.format == "json") {
    nlohmann::json doc = bounds_json(b);
    doc["schema_version"] = kSchemaVersion;
    if (o.envelope) doc["envelope"] = {b.lower.ceil().get_str(), b.upper.floor().get_str()};
    out << doc.dump(2) << "\n";
  } else if (o.envelope) {
    out << b.lower.ceil().get_str() << " " << b.upper.floor().get_str() << "\n";
  } else {
    out << b.lower << " " << b.upper << "\n";
  }
  return 0;
}

DimValue parse_target(const std::string& text) {
  if (text.empty() || !std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw usage_error("--target expects a non-negative integer, got '" + text + "'");
  }
  return DimValue(BigInt(text));
}

int cmd_decompose(const Options& o, std::ostream& out, std::ostream& err) {
  reject_formats(o, {"text", "json"});
  const std::uint64_t p = required_prime(o);
  if (!o.target) throw usage_error("--target is required");
  const auto solutions = decompose(p, parse_target(*o.target), {.include_nonunitary = o.include_nonunitary});
  if (o.format == "json") {
    nlohmann::json rows = nlohmann::json::array();
    for (const Decomposition& d : solutions) rows.push_back(decomposition_json(d));
    out << nlohmann::json{{"schema_version", kSchemaVersion}, {"prime", p}, {"target", *o.target},
                          {"include_nonunitary", o.include_nonunitary}, {"solutions", rows}}
               .dump(2)
        << "\n";
  } else {
    for (const Decomposition& d : solutions) out << decomposition_text(d) << "\n";
  }
  err << solutions.size() << " solution(s)\n";
  return 0;
}

int cmd_analyze(const Options& o, std::ostream& out) {
  reject_formats(o, {"text", "json"});
  const AnalysisReport report = analyze_level(single_weight(o), required_prime(o));
  if (o.format == "json") {
    out << analysis_json(report).dump(2) << "\n";
  } else {
    out << analysis_text(report);
  }
  return 0;
}

int cmd_irreps(const Options& o, std::ostream& out) {
  const std::uint64_t p = required_prime(o);
  const OutputFormat format = parse_output_format(o.format);
  const auto table = irrep_table();
  switch (format) {
    case OutputFormat::Json:
      out << irreps_json(p).dump(2) << "\n";
      break;
    case OutputFormat::Csv:
      out << "index,formula,value,unitary\n";
      for (const IrrepEntry& e : table) {
        out << e.index << "," << e.formula << "," << e.dim_at(p).to_string() << ","
            << (e.unitary_relevant ? "true" : "false") << "\n";
      }
      break;
    case OutputFormat::Latex:
      out << "\\begin{tabular}{|l|l|r|}\n\\hline\nNotation & Dimension & $p=" << p << "$\\\\\n\\hline\n";
      for (const IrrepEntry& e : table) {
        out << "$a_{" << e.index << "}(p)$ & $" << e.formula << "$ & " << e.dim_at(p).to_string() << "\\\\\n\\hline\n";
      }
      out << "\\end{tabular}\n";
      break;
    case OutputFormat::Text: {
      std::size_t width = 0;
      for (const IrrepEntry& e : table) width = std::max(width, e.dim_at(p).to_string().size());
      for (const IrrepEntry& e : table) {
        const std::string value = e.dim_at(p).to_string();
        out << "a" << e.index << (e.index < 10 ? "   " : "  ") << std::string(width - value.size(), ' ') << value
            << "  " << e.formula << (e.unitary_relevant ? "" : "  (non-unitary)") << "\n";
      }
      break;
    }
  }
  return 0;
}

int cmd_verify(const Options& o, std::ostream& out) {
  reject_formats(o, {"text", "json"});
  const VerificationReport report = verify_published_values();
  if (o.format == "json") {
    out << report.to_json().dump(2) << "\n";
  } else {
    out << report.to_text();
  }
  return report.passed() ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Dimensions of spaces of degree-2 Siegel cusp forms", "siegel-dims"};
  app.fallthrough();
  app.require_subcommand(1);

  Options o;
  app.add_option("--family", o.family, "full|gamma0|paramodular|principal");
  app.add_option("--weight", o.weight, "weight k");
  app.add_option("--weights", o.weights, "weight range A..B");
  app.add_option("--level", o.level, "level N");
  app.add_option("--levels", o.levels, "comma-separated levels")->delimiter(',');
  app.add_option("--prime", o.prime, "prime p");
  app.add_option("--target", o.target, "target dimension D");
  app.add_flag("--include-nonunitary", o.include_nonunitary, "also use a_16 and a_17");
  app.add_flag("--envelope", o.envelope, "print ceil(lower) and floor(upper)");
  app.add_option("--format", o.format, "text|csv|json|latex");

  const char* names[] = {"dim", "table", "bounds", "decompose", "analyze", "irreps", "verify"};
  for (const char* name : names) app.add_subcommand(name);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help() << kUsage;
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << kUsage;
    return 1;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    if (command == "dim") return cmd_dim(o, out);
    if (command == "table") return cmd_table(o, out);
    if (command == "bounds") return cmd_bounds(o, out);
    if (command == "decompose") return cmd_decompose(o, out, err);
    if (command == "analyze") return cmd_analyze(o, out);
    if (command == "irreps") return cmd_irreps(o, out);
    return cmd_verify(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    if (e.kind() == ErrorKind::InvalidArgument) err << kUsage;
    return e.is_internal() ? 2 : 1;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace siegel
