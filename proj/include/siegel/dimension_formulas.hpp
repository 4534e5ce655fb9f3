#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <utility>

#include "siegel/dim_value.hpp"
#include "siegel/exact_arith.hpp"

namespace siegel {

enum class GroupFamily { FullLevel, Gamma0, Paramodular, Principal };

std::string_view to_string(GroupFamily family);
/// Accepts "full", "gamma0", "paramodular", "principal".
GroupFamily parse_group_family(std::string_view name);

/// Residue tables of the closed-form dimension of S_k(Sp(4,Z)), indexed by
/// k mod 12. `constant[r]` is scaled by 1/(2^7 3^3); `linear[r] = {a, b}`
/// contributes (a k + b)/(2^5 3^3).
struct FullLevelCoefficients {
  std::array<std::int64_t, 12> constant;
  std::array<std::array<std::int64_t, 2>, 12> linear;

  static const FullLevelCoefficients& published();
};

/// Exact value of the closed form N1 + N2 + N3 + N4 before the integrality check.
ExactRational full_level_closed_form(Weight k, const FullLevelCoefficients& coeffs);

/// dim S_k(Sp(4,Z)) for k >= 4.
DimValue dim_full_level(Weight k);
DimValue dim_full_level(Weight k, const FullLevelCoefficients& coeffs);

/// dim S_k(Gamma_0(N)). Only weight 1 (any N >= 1, where the space vanishes)
/// and weight 4 at N in {2, 3, 5, 7, 11, 13} are known; anything else throws
/// NotTabulated. See docs/provenance.md.
DimValue dim_gamma0(Weight k, std::uint64_t level);

/// The tabulated weight-4 Gamma_0(p) values, ordered by p.
std::span<const std::pair<std::uint64_t, int>> gamma0_weight4_table();

/// dim S_4(K(p)). Ibukiyama's closed form for p >= 5; the tabulated 0 for p in {2, 3}.
DimValue dim_paramodular_weight4(std::uint64_t p);

/// The closed form for p >= 5 as an exact rational (InvalidArgument for p < 5).
ExactRational paramodular_weight4_closed_form(std::uint64_t p);

/// The tabulated weight-4 paramodular values for p <= 19, ordered by p.
std::span<const std::pair<std::uint64_t, int>> paramodular_weight4_table();

/// dim S_k(Gamma(p)) for k >= 4 and any prime p (including 2).
DimValue dim_principal_prime(Weight k, std::uint64_t p);

/// M = prod (1 - p^-2)(1 - p^-4) over the primes dividing N.
ExactRational hecke_factor(const SquareFreeLevel& level);

/// dim S_k(Gamma(N)) for odd square-free N and k >= 4.
DimValue dim_principal(Weight k, const SquareFreeLevel& level);

}  // namespace siegel
