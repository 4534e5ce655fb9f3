#include "siegel/newform_bounds.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <numeric>
#include <string>
#include <utility>

#include "siegel/dimension_formulas.hpp"
#include "siegel/error.hpp"
#include "siegel/irrep_table.hpp"

namespace siegel {

namespace {

void require_weight(Weight k) {
  if (k.value() < 4) {
    throw Error(ErrorKind::WeightOutOfRange, "bounds need weight >= 4, got " + std::to_string(k.value()));
  }
}

BigInt big(std::uint64_t n) { return BigInt(static_cast<unsigned long>(n)); }

std::optional<std::uint64_t> to_u64(const BigInt& n) {
  if (n < 0 || n > BigInt(std::numeric_limits<unsigned long>::max())) return std::nullopt;
  return n.get_ui();
}

int index_count(bool include_nonunitary) { return include_nonunitary ? kIrrepCount : kUnitaryIrrepCount; }

// The constituents whose reduction mod p has dimension a_14. Only the pair
// needed at (k, p) = (4, 3) is known.
constexpr std::array<LocalConstituent, 2> kA14Constituents = {{
    {"τ(T, ν^{-1/2}σ)", true, false, true},
    {"L(ν^{1/2}St_GL(2), ν^{-1/2}σ)", false, true, false},
}};

}  // namespace

BoundPair bounds_prime(Weight k, std::uint64_t p) {
  require_weight(k);
  require_odd_prime(p);
  const BigInt kk(k.value());
  const BigInt q = big(p);
  const BigInt num = (2 * kk * kk * kk - 9 * kk * kk + 13 * kk - 6) * q * q * q + (180 - 120 * kk) * q + 360;

  BoundPair bounds;
  bounds.lower = ExactRational(BigInt(num * q * (q - 1) * (q - 1)), BigInt(34560));
  if (p == 3) {
    bounds.upper = ExactRational(BigInt(6 * kk * kk * kk - 27 * kk * kk - kk + 82), BigInt(12));
  } else {
    bounds.upper = ExactRational(BigInt(num * q * (q * q * q * q - 1)), BigInt(17280));
  }

  const ExactRational via_dimension =
      dim_principal_prime(k, p).as_rational() / irrep_dim(1, p).as_rational();
  if (bounds.lower != via_dimension) {
    throw Error(ErrorKind::IntegralityFailure,
                "lower bound " + bounds.lower.to_string() + " disagrees with dim/a_1 = " + via_dimension.to_string());
  }
  return bounds;
}

BoundPair bounds_squarefree(Weight k, const SquareFreeLevel& level) {
  require_weight(k);
  const ExactRational dim = dim_principal(k, level).as_rational();
  const auto primes = level.primes();

  BigInt a1_sum = 0;
  for (std::uint64_t p : primes) a1_sum += irrep_dim(1, p).value();

  BigInt divisor = 0;
  if (level.divisible_by(3)) {
    // primes are sorted, so 3 | N means primes[0] == 3.
    divisor = 6;
    for (std::size_t i = 1; i < primes.size(); ++i) divisor += big(primes[i]) * big(primes[i]) - 1;
  } else {
    for (std::uint64_t p : primes) divisor += big(p) * big(p) - 1;
  }
  return {dim / ExactRational(a1_sum), dim / ExactRational(divisor)};
}

Decomposition::Decomposition(std::uint64_t prime, DimValue target, std::vector<std::uint64_t> multiplicities)
    : prime_(prime), target_(std::move(target)), multiplicities_(std::move(multiplicities)) {
  if (multiplicities_.size() != static_cast<std::size_t>(kUnitaryIrrepCount) &&
      multiplicities_.size() != static_cast<std::size_t>(kIrrepCount)) {
    throw Error(ErrorKind::InvalidArgument, "a decomposition has 15 or 17 multiplicities");
  }
  BigInt sum = 0;
  for (std::size_t i = 0; i < multiplicities_.size(); ++i) {
    sum += big(multiplicities_[i]) * irrep_dim(static_cast<int>(i) + 1, prime_).value();
  }
  if (sum != target_.value()) {
    throw Error(ErrorKind::IntegralityFailure,
                "multiplicities sum to " + sum.get_str() + ", not " + target_.to_string());
  }
}

std::uint64_t Decomposition::multiplicity(int index) const {
  if (index < 1 || index > kIrrepCount) {
    throw Error(ErrorKind::IndexOutOfRange, "irrep index " + std::to_string(index));
  }
  const auto i = static_cast<std::size_t>(index - 1);
  return i < multiplicities_.size() ? multiplicities_[i] : 0;
}

BigInt Decomposition::total() const {
  BigInt sum = 0;
  for (std::uint64_t c : multiplicities_) sum += big(c);
  return sum;
}

std::vector<Decomposition> decompose(std::uint64_t p, const DimValue& target, DecomposeOptions options) {
  require_odd_prime(p);
  const auto goal = to_u64(target.value());
  if (!goal) {
    throw Error(ErrorKind::TooManySolutions, "target " + target.to_string() + " is beyond enumeration range");
  }
  const int count = index_count(options.include_nonunitary);

  // Search order: descending dimension, index as tie-break.
  struct Slot {
    std::size_t position;  // c_n lives at position n - 1
    std::uint64_t dim;
  };
  std::vector<Slot> slots;
  for (int n = 1; n <= count; ++n) {
    const auto d = to_u64(irrep_dim(n, p).value());
    // A dimension too wide for 64 bits exceeds any enumerable target.
    slots.push_back({static_cast<std::size_t>(n - 1), d.value_or(std::numeric_limits<std::uint64_t>::max())});
  }
  std::stable_sort(slots.begin(), slots.end(), [](const Slot& a, const Slot& b) { return a.dim > b.dim; });

  // suffix_gcd[i] = gcd of slots[i..]; a remainder it does not divide is unreachable.
  std::vector<std::uint64_t> suffix_gcd(slots.size() + 1, 0);
  for (std::size_t i = slots.size(); i-- > 0;) suffix_gcd[i] = std::gcd(suffix_gcd[i + 1], slots[i].dim);

  std::vector<std::vector<std::uint64_t>> found;
  std::vector<std::uint64_t> current(static_cast<std::size_t>(count), 0);

  auto record = [&] {
    if (found.size() >= options.solution_cap) {
      throw Error(ErrorKind::TooManySolutions,
                  "more than " + std::to_string(options.solution_cap) + " decompositions of " +
                      target.to_string() + " at p=" + std::to_string(p));
    }
    found.push_back(current);
  };

  auto search = [&](auto&& self, std::size_t i, std::uint64_t remaining) -> void {
    if (remaining == 0) {
      record();
      return;
    }
    if (i == slots.size() || remaining % suffix_gcd[i] != 0) return;
    const Slot& slot = slots[i];
    if (i + 1 == slots.size()) {
      current[slot.position] = remaining / slot.dim;
      record();
      current[slot.position] = 0;
      return;
    }
    const std::uint64_t max_count = remaining / slot.dim;
    for (std::uint64_t c = 0; c <= max_count; ++c) {
      current[slot.position] = c;
      self(self, i + 1, remaining - c * slot.dim);
    }
    current[slot.position] = 0;
  };
  search(search, 0, *goal);

  std::sort(found.begin(), found.end());
  std::vector<Decomposition> out;
  out.reserve(found.size());
  for (auto& m : found) out.emplace_back(p, target, std::move(m));
  return out;
}

std::optional<BigInt> count_decompositions(std::uint64_t p, const DimValue& target, bool include_nonunitary) {
  require_odd_prime(p);
  const auto goal = to_u64(target.value());
  if (!goal || *goal > kMaxCountableTarget) return std::nullopt;
  const std::size_t size = *goal + 1;
  std::vector<BigInt> ways(size, 0);
  ways[0] = 1;
  for (int n = 1; n <= index_count(include_nonunitary); ++n) {
    const auto d = to_u64(irrep_dim(n, p).value());
    if (!d || *d >= size) continue;
    for (std::size_t x = *d; x < size; ++x) ways[x] += ways[x - *d];
  }
  return ways[*goal];
}

AnalysisReport analyze_level(Weight k, std::uint64_t p, std::uint64_t solution_cap) {
  require_weight(k);
  require_odd_prime(p);

  AnalysisReport report;
  report.weight = k.value();
  report.prime = p;
  report.dimension = dim_principal_prime(k, p);
  report.bounds = bounds_prime(k, p);
  report.solution_count = count_decompositions(p, report.dimension);

  if (report.solution_count && *report.solution_count > big(solution_cap)) {
    report.solutions_omitted = true;
  } else {
    try {
      report.solutions = decompose(p, report.dimension, {.include_nonunitary = false, .solution_cap = solution_cap});
      if (!report.solution_count) report.solution_count = BigInt(static_cast<unsigned long>(report.solutions.size()));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::TooManySolutions) throw;
      report.solutions_omitted = true;
    }
  }

  if (report.solutions.size() != 1) return report;

  const Decomposition& only = report.solutions.front();
  report.newform_dimension = only.total();
  report.conclusion = *report.newform_dimension == 1
                          ? std::string("a single automorphic representation accounts for the space")
                          : report.newform_dimension->get_str() + " automorphic representations account for the space";

  const bool single_a14 = *report.newform_dimension == 1 && only.multiplicity(14) == 1;
  if (report.weight != 4 || p != 3 || !single_a14) return report;

  LocalComponentAnalysis local{
      .candidates = {},
      .gamma0_dimension = dim_gamma0(k, p),
      .paramodular_dimension = dim_paramodular_weight4(p),
      .identified = {},
      .saito_kurokawa = false,
  };
  const bool has_gamma0 = local.gamma0_dimension.value() > 0;
  const bool has_paramodular = local.paramodular_dimension.value() > 0;
  const LocalConstituent* match = nullptr;
  int matches = 0;
  for (const LocalConstituent& c : kA14Constituents) {
    local.candidates.emplace_back(c.label);
    if (c.has_gamma0_fixed_vector == has_gamma0 && c.has_paramodular_fixed_vector == has_paramodular) {
      match = &c;
      ++matches;
    }
  }
  if (matches == 1) {
    local.identified = std::string(match->label);
    local.saito_kurokawa = match->saito_kurokawa;
  }
  report.local_component = std::move(local);
  return report;
}

}  // namespace siegel
