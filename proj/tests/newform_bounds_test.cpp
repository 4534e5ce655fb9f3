#include <gtest/gtest.h>

#include <algorithm>

#include "siegel/dimension_formulas.hpp"
#include "siegel/error.hpp"
#include "siegel/irrep_table.hpp"
#include "siegel/newform_bounds.hpp"

namespace siegel {
namespace {

using Vec = std::vector<std::uint64_t>;

// Oracle: plain recursion over c_1, c_2, ... in index order.
void enumerate(const Vec& dims, std::size_t i, std::uint64_t left, Vec& cur, std::vector<Vec>& out) {
  if (i == dims.size()) {
    if (left == 0) out.push_back(cur);
    return;
  }
  for (std::uint64_t c = 0; c * dims[i] <= left; ++c) {
    cur[i] = c;
    enumerate(dims, i + 1, left - c * dims[i], cur, out);
  }
  cur[i] = 0;
}

std::vector<Vec> oracle(std::uint64_t p, std::uint64_t target, int count) {
  Vec dims;
  for (int n = 1; n <= count; ++n) dims.push_back(irrep_dim(n, p).value().get_ui());
  std::vector<Vec> out;
  Vec cur(dims.size(), 0);
  enumerate(dims, 0, target, cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Vec> vectors(const std::vector<Decomposition>& ds) {
  std::vector<Vec> out;
  for (const auto& d : ds) out.push_back(d.multiplicities());
  return out;
}

DimValue dim(unsigned long n) { return DimValue(BigInt(n)); }

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::InvalidArgument;
}

TEST(BoundsPrime, CorollaryPoint) {
  const BoundPair b = bounds_prime(Weight(4), 3);
  EXPECT_EQ(b.lower, ExactRational(3, 32));
  EXPECT_EQ(b.upper, ExactRational(5, 2));
}

TEST(BoundsPrime, HandComputedValues) {
  const BoundPair at5 = bounds_prime(Weight(4), 5);
  EXPECT_EQ(at5.lower, ExactRational(145, 24));
  EXPECT_EQ(at5.upper, ExactRational(1885, 4));
  const BoundPair k5 = bounds_prime(Weight(5), 3);
  EXPECT_EQ(k5.lower, ExactRational(19, 40));
  EXPECT_EQ(k5.lower, ExactRational(76, 160));
  EXPECT_EQ(k5.upper, ExactRational(38, 3));
}

TEST(BoundsPrime, LowerIdentityAndOrdering) {
  for (std::uint64_t p : {3, 5, 7, 11, 13}) {
    for (int k = 4; k <= 20; ++k) {
      const BoundPair b = bounds_prime(Weight(k), p);
      EXPECT_EQ(b.lower * irrep_dim(1, p).as_rational(), dim_principal_prime(Weight(k), p).as_rational());
      EXPECT_GT(b.lower, ExactRational(0));
      EXPECT_LE(b.lower, b.upper);
    }
  }
}

TEST(BoundsPrime, Errors) {
  EXPECT_EQ(kind_of([] { bounds_prime(Weight(3), 3); }), ErrorKind::WeightOutOfRange);
  EXPECT_EQ(kind_of([] { bounds_prime(Weight(4), 2); }), ErrorKind::EvenPrime);
}

TEST(BoundsSquarefree, SinglePrimeAgreesWithPrimeBounds) {
  for (std::uint64_t p : {3, 5, 7}) {
    for (int k = 4; k <= 10; ++k) {
      const BoundPair one = bounds_prime(Weight(k), p);
      const BoundPair many = bounds_squarefree(Weight(k), parse_square_free_level(p));
      EXPECT_EQ(one.lower, many.lower);
      if (p == 3) {
        EXPECT_EQ(one.upper, many.upper);
      } else {
        // The p != 3 prime-level upper bound is twice the square-free one.
        EXPECT_EQ(one.upper, ExactRational(2) * many.upper);
      }
    }
  }
}

TEST(BoundsSquarefree, CompositeLevels) {
  const BoundPair b15 = bounds_squarefree(Weight(4), parse_square_free_level(15));
  EXPECT_EQ(b15.lower, ExactRational(BigInt(403977600), BigInt(1096)));
  EXPECT_EQ(b15.lower.to_string(), "50497200/137");
  EXPECT_EQ(b15.upper, ExactRational(BigInt(403977600), BigInt(30)));
  EXPECT_EQ(b15.upper.to_string(), "13465920");

  const BoundPair b35 = bounds_squarefree(Weight(4), parse_square_free_level(35));
  EXPECT_EQ(b35.upper, ExactRational(BigInt("2229619392000"), BigInt(72)));
  EXPECT_EQ(b35.lower.to_string(), "25336584000/47");
}

TEST(Decompose, CorollaryUniqueSolution) {
  const auto solutions = decompose(3, dim(15));
  ASSERT_EQ(solutions.size(), 1u);
  for (int n = 1; n <= 15; ++n) EXPECT_EQ(solutions[0].multiplicity(n), n == 14 ? 1u : 0u);
  EXPECT_EQ(solutions[0].total(), 1);
}

TEST(Decompose, SmallTargets) {
  const auto zero = decompose(3, dim(0));
  ASSERT_EQ(zero.size(), 1u);
  EXPECT_EQ(zero[0].multiplicities(), Vec(15, 0));
  EXPECT_TRUE(decompose(3, dim(5)).empty());
  const auto twelve = decompose(3, dim(12));
  ASSERT_EQ(twelve.size(), 1u);
  EXPECT_EQ(twelve[0].multiplicity(15), 2u);
}

TEST(Decompose, MatchesOracle) {
  for (std::uint64_t p : {3, 5}) {
    for (std::uint64_t d = 0; d <= 200; ++d) {
      ASSERT_EQ(vectors(decompose(p, dim(d))), oracle(p, d, 15)) << p << " " << d;
    }
  }
}

TEST(Decompose, NonunitaryMatchesOracleAndIsSuperset) {
  for (std::uint64_t d = 0; d <= 120; ++d) {
    const auto with = vectors(decompose(3, dim(d), {.include_nonunitary = true}));
    ASSERT_EQ(with, oracle(3, d, 17)) << d;
    for (const Vec& v : vectors(decompose(3, dim(d)))) {
      Vec padded = v;
      padded.resize(17, 0);
      EXPECT_TRUE(std::binary_search(with.begin(), with.end(), padded)) << d;
    }
  }
}

TEST(Decompose, LexicographicOrder) {
  const auto solutions = vectors(decompose(3, dim(76)));
  EXPECT_EQ(solutions.size(), 13u);
  EXPECT_TRUE(std::is_sorted(solutions.begin(), solutions.end()));
  EXPECT_EQ(solutions, oracle(3, 76, 15));
}

TEST(Decompose, CapAndErrors) {
  EXPECT_EQ(kind_of([] { decompose(3, dim(1686), {.solution_cap = 1000}); }), ErrorKind::TooManySolutions);
  EXPECT_EQ(kind_of([] { decompose(2, dim(10)); }), ErrorKind::EvenPrime);
  EXPECT_EQ(decompose(3, dim(76), {.solution_cap = 13}).size(), 13u);
  EXPECT_EQ(kind_of([] { decompose(3, dim(76), {.solution_cap = 12}); }), ErrorKind::TooManySolutions);
}

TEST(Decomposition, EquationCheckedOnConstruction) {
  Vec c(15, 0);
  c[13] = 1;
  EXPECT_NO_THROW(Decomposition(3, dim(15), c));
  EXPECT_EQ(kind_of([&] { Decomposition(3, dim(16), c); }), ErrorKind::IntegralityFailure);
  EXPECT_EQ(kind_of([] { Decomposition(3, dim(0), Vec(3, 0)); }), ErrorKind::InvalidArgument);
}

TEST(CountDecompositions, AgreesWithEnumeration) {
  for (std::uint64_t p : {3, 5}) {
    for (std::uint64_t d = 0; d <= 300; ++d) {
      EXPECT_EQ(*count_decompositions(p, dim(d)), decompose(p, dim(d)).size()) << p << " " << d;
    }
  }
  EXPECT_EQ(*count_decompositions(3, dim(76), true), 105);
  EXPECT_FALSE(count_decompositions(3, dim(kMaxCountableTarget + 1)).has_value());
}

TEST(AnalyzeLevel, WeightFourLevelThree) {
  const AnalysisReport r = analyze_level(Weight(4), 3);
  EXPECT_EQ(r.dimension.value(), 15);
  EXPECT_EQ(r.bounds.lower, ExactRational(3, 32));
  EXPECT_EQ(r.bounds.upper, ExactRational(5, 2));
  ASSERT_EQ(r.solutions.size(), 1u);
  ASSERT_TRUE(r.newform_dimension.has_value());
  EXPECT_EQ(*r.newform_dimension, 1);
  ASSERT_TRUE(r.conclusion.has_value());
  ASSERT_TRUE(r.local_component.has_value());
  const LocalComponentAnalysis& local = *r.local_component;
  EXPECT_EQ(local.candidates.size(), 2u);
  EXPECT_EQ(local.gamma0_dimension.value(), 1);
  EXPECT_EQ(local.paramodular_dimension.value(), 0);
  EXPECT_EQ(local.identified, "τ(T, ν^{-1/2}σ)");
  EXPECT_TRUE(local.saito_kurokawa);
}

TEST(AnalyzeLevel, WeightFiveLevelThree) {
  const AnalysisReport r = analyze_level(Weight(5), 3);
  EXPECT_EQ(r.dimension.value(), 76);
  EXPECT_EQ(r.solutions.size(), 13u);
  EXPECT_EQ(*r.solution_count, 13);
  EXPECT_FALSE(r.newform_dimension.has_value());
  EXPECT_FALSE(r.local_component.has_value());
}

TEST(AnalyzeLevel, WeightFourLevelFiveExceedsCap) {
  const AnalysisReport r = analyze_level(Weight(4), 5);
  EXPECT_EQ(r.dimension.value(), 5655);
  EXPECT_EQ(r.bounds.lower, ExactRational(145, 24));
  EXPECT_EQ(r.bounds.upper, ExactRational(1885, 4));
  ASSERT_TRUE(r.solution_count.has_value());
  EXPECT_EQ(*r.solution_count, 19005458);
  EXPECT_TRUE(r.solutions_omitted);
  EXPECT_TRUE(r.solutions.empty());
  EXPECT_FALSE(r.newform_dimension.has_value());
}

TEST(AnalyzeLevel, LargeLevelFallsBackToCappedSearch) {
  // D = 199500 is countable; the count is far above the cap.
  const AnalysisReport r = analyze_level(Weight(4), 7);
  EXPECT_TRUE(r.solutions_omitted);
  EXPECT_EQ(r.solution_count->get_str(), "7426455280596302879");
}

}  // namespace
}  // namespace siegel
