#include "siegel/dimension_formulas.hpp"

#include <algorithm>
#include <string>

#include "siegel/error.hpp"

namespace siegel {

namespace {

void require_weight_at_least(Weight k, int minimum) {
  if (k.value() < minimum) {
    throw Error(ErrorKind::WeightOutOfRange,
                "weight " + std::to_string(k.value()) + " is below the minimum " + std::to_string(minimum));
  }
}

void require_prime(std::uint64_t p) {
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
}

BigInt big(std::uint64_t n) { return BigInt(static_cast<unsigned long>(n)); }

// Weight-4 values; the weight-1 case vanishes for every level.
constexpr std::array<std::pair<std::uint64_t, int>, 6> kGamma0Weight4 = {{
    {2, 0}, {3, 1}, {5, 1}, {7, 3}, {11, 7}, {13, 11},
}};

constexpr std::array<std::pair<std::uint64_t, int>, 8> kParamodularWeight4 = {{
    {2, 0}, {3, 0}, {5, 0}, {7, 1}, {11, 1}, {13, 2}, {17, 2}, {19, 3},
}};

}  // namespace

std::string_view to_string(GroupFamily family) {
  switch (family) {
    case GroupFamily::FullLevel: return "full";
    case GroupFamily::Gamma0: return "gamma0";
    case GroupFamily::Paramodular: return "paramodular";
    case GroupFamily::Principal: return "principal";
  }
  return "unknown";
}

GroupFamily parse_group_family(std::string_view name) {
  if (name == "full") return GroupFamily::FullLevel;
  if (name == "gamma0") return GroupFamily::Gamma0;
  if (name == "paramodular") return GroupFamily::Paramodular;
  if (name == "principal") return GroupFamily::Principal;
  throw Error(ErrorKind::InvalidArgument, "unknown family '" + std::string(name) + "'");
}

const FullLevelCoefficients& FullLevelCoefficients::published() {
  static const FullLevelCoefficients kCoefficients{
      {1131, 229, -229, -1131, 427, -571, 123, -203, 203, -123, 571, -427},
      {{
          {17, -294}, {-25, 325}, {-25, 254}, {17, -261},
          {17, -86}, {-1, 53}, {-1, -42}, {-7, 91},
          {-7, 2}, {-1, -27}, {-1, 166}, {17, -181},
      }},
  };
  return kCoefficients;
}

ExactRational full_level_closed_form(Weight k, const FullLevelCoefficients& coeffs) {
  const std::int64_t w = k.value();
  const auto r = static_cast<std::size_t>(w % 12);

  const ExactRational n1 = ExactRational(coeffs.constant[r]) / ExactRational(128 * 27);

  ExactRational n2(0);
  if (w % 5 == 0) n2 = ExactRational(1, 5);
  if (w % 5 == 3) n2 = ExactRational(-1, 5);

  const auto [slope, intercept] = coeffs.linear[r];
  const ExactRational n3 = ExactRational(slope * w + intercept) / ExactRational(32 * 27);

  const BigInt kk(static_cast<long>(w));
  const BigInt cubic = (w % 2 == 0) ? BigInt(2 * kk * kk * kk + 96 * kk * kk - 52 * kk - 3231)
                                    : BigInt(2 * kk * kk * kk - 114 * kk * kk + 2018 * kk - 9051);
  const ExactRational n4 = ExactRational(cubic, BigInt(128 * 27 * 5));

  return n1 + n2 + n3 + n4;
}

DimValue dim_full_level(Weight k) { return dim_full_level(k, FullLevelCoefficients::published()); }

DimValue dim_full_level(Weight k, const FullLevelCoefficients& coeffs) {
  require_weight_at_least(k, 4);
  return DimValue::from_rational(full_level_closed_form(k, coeffs),
                                 "dim S_k(Sp(4,Z)) at k=" + std::to_string(k.value()));
}

std::span<const std::pair<std::uint64_t, int>> gamma0_weight4_table() { return kGamma0Weight4; }

DimValue dim_gamma0(Weight k, std::uint64_t level) {
  if (level < 1) throw Error(ErrorKind::InvalidArgument, "level must be positive");
  if (k.value() == 1) return DimValue(0);
  if (k.value() == 4) {
    const auto* it = std::find_if(kGamma0Weight4.begin(), kGamma0Weight4.end(),
                                  [level](const auto& row) { return row.first == level; });
    if (it != kGamma0Weight4.end()) return DimValue(it->second);
  }
  throw Error(ErrorKind::NotTabulated,
              "dim S_k(Gamma_0(N)) has no closed form here; k=" + std::to_string(k.value()) +
                  ", N=" + std::to_string(level) +
                  " is outside the tabulated cases (k=1 for all N; k=4 for N in {2,3,5,7,11,13}). "
                  "See docs/provenance.md");
}

std::span<const std::pair<std::uint64_t, int>> paramodular_weight4_table() { return kParamodularWeight4; }

ExactRational paramodular_weight4_closed_form(std::uint64_t p) {
  require_prime(p);
  if (p < 5) throw Error(ErrorKind::InvalidArgument, "the weight-4 paramodular formula needs p >= 5");
  const ExactRational q(big(p));
  ExactRational sum = q * q / ExactRational(576) + q / ExactRational(8) - ExactRational(143, 576);
  sum += (q / ExactRational(96) - ExactRational(1, 8)) * ExactRational(legendre_symbol(-1, p));
  sum += ExactRational(1, 8) * ExactRational(legendre_symbol(2, p));
  sum += ExactRational(1, 12) * ExactRational(legendre_symbol(3, p));
  sum += q / ExactRational(36) * ExactRational(legendre_symbol(-3, p));
  return sum;
}

DimValue dim_paramodular_weight4(std::uint64_t p) {
  require_prime(p);
  if (p < 5) {
    // Outside the closed form's domain; fall back to the table.
    return DimValue(p == 2 ? kParamodularWeight4[0].second : kParamodularWeight4[1].second);
  }
  return DimValue::from_rational(paramodular_weight4_closed_form(p),
                                 "dim S_4(K(p)) at p=" + std::to_string(p));
}

DimValue dim_principal_prime(Weight k, std::uint64_t p) {
  require_weight_at_least(k, 4);
  require_prime(p);
  const BigInt kk(k.value());
  const BigInt q = big(p);
  const BigInt cubic = 2 * kk * kk * kk - 9 * kk * kk + 13 * kk - 6;
  const BigInt inner = cubic * q * q * q + (180 - 120 * kk) * q + 360;
  const BigInt numerator = inner * q * (q * q * q * q - 1) * (q * q - 1);
  return DimValue::from_rational(ExactRational(numerator, BigInt(34560)),
                                 "dim S_k(Gamma(p)) at k=" + std::to_string(k.value()) +
                                     ", p=" + std::to_string(p));
}

ExactRational hecke_factor(const SquareFreeLevel& level) {
  ExactRational m(1);
  for (std::uint64_t p : level.primes()) {
    const ExactRational q(big(p));
    const ExactRational inv_sq = ExactRational(1) / (q * q);
    m *= (ExactRational(1) - inv_sq) * (ExactRational(1) - inv_sq * inv_sq);
  }
  return m;
}

DimValue dim_principal(Weight k, const SquareFreeLevel& level) {
  require_weight_at_least(k, 4);
  const ExactRational n(big(level.value()));
  const ExactRational w(k.value());
  const ExactRational falling = (2 * w - 2) * (2 * w - 3) * (2 * w - 4);
  const ExactRational bracket =
      pow(n, 3) * falling / ExactRational(32 * 9 * 5) - n * (2 * w - 3) / ExactRational(6) + 1;
  const ExactRational value = pow(n, 7) / ExactRational(96) * bracket * hecke_factor(level);
  return DimValue::from_rational(value, "dim S_k(Gamma(N)) at k=" + std::to_string(k.value()) +
                                            ", N=" + std::to_string(level.value()));
}

}  // namespace siegel
