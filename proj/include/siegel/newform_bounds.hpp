#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "siegel/dim_value.hpp"
#include "siegel/exact_arith.hpp"

namespace siegel {

/// Exact lower/upper bounds on dim S_k^new; 0 < lower <= upper.
struct BoundPair {
  ExactRational lower;
  ExactRational upper;

  friend bool operator==(const BoundPair&, const BoundPair&) = default;
};

/// Bounds at odd prime level p, k >= 4. The upper bound has a separate
/// closed form at p = 3.
BoundPair bounds_prime(Weight k, std::uint64_t p);

/// Bounds at odd square-free level N, k >= 4, built on dim_principal.
BoundPair bounds_squarefree(Weight k, const SquareFreeLevel& level);

inline constexpr std::uint64_t kDefaultSolutionCap = 1'000'000;

/// Non-negative multiplicities c_1..c_15 (or c_1..c_17) with
/// sum c_n a_n(p) = target. The equation is re-checked on construction.
class Decomposition {
 public:
  /// Throws IntegralityFailure if the multiplicities do not sum to `target`.
  Decomposition(std::uint64_t prime, DimValue target, std::vector<std::uint64_t> multiplicities);

  std::uint64_t prime() const { return prime_; }
  const DimValue& target() const { return target_; }
  /// multiplicities()[n - 1] is c_n.
  const std::vector<std::uint64_t>& multiplicities() const { return multiplicities_; }
  std::uint64_t multiplicity(int index) const;
  /// Sum of the c_n: the number of representations in the decomposition.
  BigInt total() const;

  friend bool operator==(const Decomposition&, const Decomposition&) = default;

 private:
  std::uint64_t prime_;
  DimValue target_;
  std::vector<std::uint64_t> multiplicities_;
};

struct DecomposeOptions {
  bool include_nonunitary = false;
  std::uint64_t solution_cap = kDefaultSolutionCap;
};

/// Every solution of sum c_n a_n(p) = target, lexicographic in (c_1, c_2, ...).
/// Throws EvenPrime/NotPrime, or TooManySolutions once more than
/// `solution_cap` solutions exist.
std::vector<Decomposition> decompose(std::uint64_t p, const DimValue& target, DecomposeOptions options = {});

inline constexpr std::uint64_t kMaxCountableTarget = 2'000'000;

/// Number of solutions by dynamic programming; nullopt when the target
/// exceeds kMaxCountableTarget.
std::optional<BigInt> count_decompositions(std::uint64_t p, const DimValue& target, bool include_nonunitary = false);

/// A representation-theoretic constituent that could account for a
/// decomposition, with the fixed-vector facts used to tell candidates apart.
struct LocalConstituent {
  std::string_view label;
  bool has_gamma0_fixed_vector;
  bool has_paramodular_fixed_vector;
  bool saito_kurokawa;
};

struct LocalComponentAnalysis {
  std::vector<std::string> candidates;
  DimValue gamma0_dimension;       // dim S_k(Gamma_0(p))
  DimValue paramodular_dimension;  // dim S_k(K(p))
  std::string identified;
  bool saito_kurokawa = false;
};

struct AnalysisReport {
  int weight = 0;
  std::uint64_t prime = 0;
  DimValue dimension;
  BoundPair bounds;
  std::optional<BigInt> solution_count;
  /// True when more than the solution cap exist and the list is left empty.
  bool solutions_omitted = false;
  std::vector<Decomposition> solutions;
  std::optional<BigInt> newform_dimension;
  std::optional<std::string> conclusion;
  std::optional<LocalComponentAnalysis> local_component;
};

/// dim S_k(Gamma(p)), its bounds and decompositions, plus the local
/// component identification at (k, p) = (4, 3).
AnalysisReport analyze_level(Weight k, std::uint64_t p, std::uint64_t solution_cap = kDefaultSolutionCap);

}  // namespace siegel
