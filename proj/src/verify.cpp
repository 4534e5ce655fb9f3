#include "siegel/verify.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "siegel/error.hpp"
#include "siegel/irrep_table.hpp"
#include "siegel/newform_bounds.hpp"
#include "siegel/report.hpp"

namespace siegel {

namespace {

class Checker {
 public:
  explicit Checker(VerificationReport& report) : report_(report) {}

  void expect(std::string name, std::string source, std::string expected,
              const std::function<std::string()>& compute) {
    VerificationCheck check{std::move(name), std::move(source), std::move(expected), {}, false};
    try {
      check.computed = compute();
      check.passed = check.computed == check.expected;
    } catch (const std::exception& e) {
      check.computed = std::string("error: ") + e.what();
    }
    report_.checks.push_back(std::move(check));
  }

 private:
  VerificationReport& report_;
};

// Plain recursion in index order with no pruning beyond the remaining target;
// deliberately shares nothing with decompose().
void naive_enumerate(const std::vector<std::uint64_t>& dims, std::size_t i, std::uint64_t remaining,
                     std::vector<std::uint64_t>& current, std::vector<std::vector<std::uint64_t>>& out) {
  if (i == dims.size()) {
    if (remaining == 0) out.push_back(current);
    return;
  }
  for (std::uint64_t c = 0; c * dims[i] <= remaining; ++c) {
    current[i] = c;
    naive_enumerate(dims, i + 1, remaining - c * dims[i], current, out);
  }
  current[i] = 0;
}

}  // namespace

bool VerificationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const VerificationCheck& c) { return c.passed; });
}

std::size_t VerificationReport::failure_count() const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [](const VerificationCheck& c) { return !c.passed; }));
}

nlohmann::json VerificationReport::to_json() const {
  nlohmann::json rows = nlohmann::json::array();
  for (const VerificationCheck& c : checks) {
    rows.push_back({{"name", c.name},
                    {"source", c.source},
                    {"expected", c.expected},
                    {"computed", c.computed},
                    {"passed", c.passed}});
  }
  return {{"schema_version", kSchemaVersion},
          {"passed", passed()},
          {"check_count", checks.size()},
          {"failure_count", failure_count()},
          {"checks", rows}};
}

std::string VerificationReport::to_text() const {
  std::ostringstream os;
  for (const VerificationCheck& c : checks) {
    os << (c.passed ? "PASS " : "FAIL ") << c.name << "  expected " << c.expected << ", computed " << c.computed;
    if (!c.passed) os << "  [" << c.source << "]";
    os << "\n";
  }
  os << (passed() ? "PASS" : "FAIL") << ": " << checks.size() - failure_count() << "/" << checks.size()
     << " checks passed\n";
  return os.str();
}

VerificationReport verify_published_values(const FullLevelCoefficients& full_level) {
  VerificationReport report;
  Checker check(report);

  const std::string full_table = "Sp(4,Z) dimension table, k = 10..20";
  const int full_values[] = {1, 0, 1, 0, 1, 0, 2, 0, 2, 0, 3};
  for (int k = 10; k <= 20; ++k) {
    check.expect("full_level.k=" + std::to_string(k), full_table, std::to_string(full_values[k - 10]),
                 [&, k] { return dim_full_level(Weight(k), full_level).to_string(); });
  }
  for (int k = 4; k <= 9; ++k) {
    check.expect("full_level.vanishing.k=" + std::to_string(k), "Sp(4,Z) vanishing below weight 10", "0",
                 [&, k] { return dim_full_level(Weight(k), full_level).to_string(); });
  }

  for (const auto& [p, value] : gamma0_weight4_table()) {
    check.expect("gamma0.weight4.p=" + std::to_string(p), "Gamma_0(p) weight-4 table", std::to_string(value),
                 [p = p] { return dim_gamma0(Weight(4), p).to_string(); });
  }
  for (std::uint64_t n : {1, 2, 15, 360}) {
    check.expect("gamma0.weight1.N=" + std::to_string(n), "weight-1 vanishing for Gamma_0(N)", "0",
                 [n] { return dim_gamma0(Weight(1), n).to_string(); });
  }

  for (const auto& [p, value] : paramodular_weight4_table()) {
    check.expect("paramodular.weight4.p=" + std::to_string(p), "K(p) weight-4 table", std::to_string(value),
                 [p = p] { return dim_paramodular_weight4(p).to_string(); });
    if (p >= 5) {
      check.expect("paramodular.closed_form.p=" + std::to_string(p), "K(p) weight-4 closed form against table",
                   std::to_string(value), [p = p] { return paramodular_weight4_closed_form(p).to_string(); });
    }
  }

  const std::string principal_prime_table = "Gamma(p) weight-4 table";
  const std::pair<std::uint64_t, const char*> weight4[] = {
      {2, "0"}, {3, "15"}, {5, "5655"}, {7, "199500"}, {11, "20683575"}, {13, "112567455"}, {17, "1687834800"}};
  for (const auto& [p, value] : weight4) {
    check.expect("principal.weight4.p=" + std::to_string(p), principal_prime_table, value,
                 [p = p] { return dim_principal_prime(Weight(4), p).to_string(); });
  }
  const std::vector<int> level3 = {15, 76, 200, 405, 709, 1130, 1686};
  const std::vector<int> level5 = {5655, 18980, 43680, 83005, 140205, 218530, 321230};
  for (int k = 4; k <= 10; ++k) {
    check.expect("principal.level3.k=" + std::to_string(k), "Gamma(3) table, k = 4..10",
                 std::to_string(level3[static_cast<std::size_t>(k - 4)]),
                 [k] { return dim_principal_prime(Weight(k), 3).to_string(); });
  }
  for (int k = 4; k <= 10; ++k) {
    check.expect("principal.level5.k=" + std::to_string(k), "Gamma(5) table, k = 4..10",
                 std::to_string(level5[static_cast<std::size_t>(k - 4)]),
                 [k] { return dim_principal_prime(Weight(k), 5).to_string(); });
  }
  check.expect("principal.level15.weight4", "printed dim S_4(Gamma(15))", "69023360250000000",
               [] { return dim_principal(Weight(4), parse_square_free_level(15)).to_string(); });

  for (std::uint64_t p : {3, 5, 7, 11, 13, 17}) {
    check.expect("principal.prime_product_agreement.p=" + std::to_string(p),
                 "product formula specialises to the prime formula, k = 4..30", "agree", [p] {
                   const SquareFreeLevel level = parse_square_free_level(p);
                   for (int k = 4; k <= 30; ++k) {
                     if (dim_principal(Weight(k), level) != dim_principal_prime(Weight(k), p)) {
                       return "differ at k=" + std::to_string(k);
                     }
                   }
                   return std::string("agree");
                 });
  }

  const std::string corollary = "newform bounds at weight 4, level 3";
  check.expect("bounds.k=4.p=3.lower", corollary, "3/32", [] { return bounds_prime(Weight(4), 3).lower.to_string(); });
  check.expect("bounds.k=4.p=3.upper", corollary, "5/2", [] { return bounds_prime(Weight(4), 3).upper.to_string(); });
  for (std::uint64_t p : {3, 5, 7, 11, 13}) {
    check.expect("bounds.lower_identity.p=" + std::to_string(p), "lower bound equals dim / a_1(p), k = 4..20",
                 "hold", [p] {
                   for (int k = 4; k <= 20; ++k) {
                     const BoundPair b = bounds_prime(Weight(k), p);
                     if (b.lower * irrep_dim(1, p).as_rational() != dim_principal_prime(Weight(k), p).as_rational()) {
                       return "fails at k=" + std::to_string(k);
                     }
                     if (b.lower > b.upper) return "lower > upper at k=" + std::to_string(k);
                   }
                   return std::string("hold");
                 });
  }

  check.expect("decompose.p=3.target=15", "unique solution of sum c_n a_n(3) = 15", "c14=1", [] {
    const auto solutions = decompose(3, DimValue(15));
    if (solutions.size() != 1) return std::to_string(solutions.size()) + " solutions";
    return decomposition_text(solutions.front());
  });
  for (std::uint64_t p : {3, 5}) {
    check.expect("decompose.oracle.p=" + std::to_string(p), "decompose against naive enumeration, D = 0..200",
                 "identical", [p] {
                   std::vector<std::uint64_t> dims;
                   for (int n = 1; n <= kUnitaryIrrepCount; ++n) dims.push_back(irrep_dim(n, p).value().get_ui());
                   for (std::uint64_t d = 0; d <= 200; ++d) {
                     std::vector<std::vector<std::uint64_t>> expected;
                     std::vector<std::uint64_t> current(dims.size(), 0);
                     naive_enumerate(dims, 0, d, current, expected);
                     std::sort(expected.begin(), expected.end());
                     const auto got = decompose(p, DimValue(static_cast<unsigned long>(d)));
                     if (got.size() != expected.size()) return "count differs at D=" + std::to_string(d);
                     for (std::size_t i = 0; i < got.size(); ++i) {
                       if (got[i].multiplicities() != expected[i]) return "solution differs at D=" + std::to_string(d);
                     }
                   }
                   return std::string("identical");
                 });
  }

  const std::string level3_analysis = "weight 4, level 3 newform and local component";
  check.expect("analysis.k=4.p=3.newform_dimension", level3_analysis, "1", [] {
    const AnalysisReport r = analyze_level(Weight(4), 3);
    return r.newform_dimension ? r.newform_dimension->get_str() : std::string("undetermined");
  });
  check.expect("analysis.k=4.p=3.local_component", level3_analysis, "τ(T, ν^{-1/2}σ); Saito-Kurokawa", [] {
    const AnalysisReport r = analyze_level(Weight(4), 3);
    if (!r.local_component) return std::string("undetermined");
    return r.local_component->identified + (r.local_component->saito_kurokawa ? "; Saito-Kurokawa" : "");
  });
  check.expect("analysis.k=4.p=3.embedded_facts", level3_analysis, "gamma0=1,paramodular=0", [] {
    const AnalysisReport r = analyze_level(Weight(4), 3);
    if (!r.local_component) return std::string("undetermined");
    return "gamma0=" + r.local_component->gamma0_dimension.to_string() +
           ",paramodular=" + r.local_component->paramodular_dimension.to_string();
  });

  check.expect("irreps.identities", "GSp(4,F_p) dimension table, odd p <= 100", "hold", [] {
    for (std::uint64_t p = 3; p <= 100; p += 2) {
      if (!is_prime(p)) continue;
      const auto a = [p](int n) { return irrep_dim(n, p).value(); };
      const BigInt q(static_cast<unsigned long>(p));
      if (a(13) + a(15) != 2 * a(14)) return "a13+a15 != 2 a14 at p=" + std::to_string(p);
      if (a(2) != q * a(10)) return "a2 != p a10 at p=" + std::to_string(p);
      if (a(5) != a(4) - 1) return "a5 != a4-1 at p=" + std::to_string(p);
      if (a(4) != q * q * q * q) return "a4 != p^4 at p=" + std::to_string(p);
    }
    return std::string("hold");
  });
  check.expect("irreps.unitary_range.p=3", "GSp(4,F_3) unitary dimensions", "15 entries, min a15=6, max a1=160", [] {
    const auto dims = unitary_dims(3);
    return std::to_string(dims.size()) + " entries, min a" + std::to_string(dims.front().index) + "=" +
           dims.front().dim.to_string() + ", max a" + std::to_string(dims.back().index) + "=" +
           dims.back().dim.to_string();
  });
  return report;
}

}  // namespace siegel
