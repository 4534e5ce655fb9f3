#include <gtest/gtest.h>

#include <set>

#include "siegel/error.hpp"
#include "siegel/irrep_table.hpp"

namespace siegel {
namespace {

std::vector<std::uint64_t> odd_primes_up_to(std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 3; p <= limit; p += 2) {
    if (is_prime(p)) out.push_back(p);
  }
  return out;
}

BigInt a(int n, std::uint64_t p) { return irrep_dim(n, p).value(); }

TEST(IrrepTable, Shape) {
  ASSERT_EQ(irrep_table().size(), 17u);
  for (int n = 1; n <= 17; ++n) {
    EXPECT_EQ(irrep_entry(n).index, n);
    EXPECT_EQ(irrep_entry(n).unitary_relevant, n <= 15);
  }
  EXPECT_EQ(irrep_entry(1).formula, "(p^2+1)(p+1)^2");
}

TEST(IrrepTable, Examples) {
  EXPECT_EQ(a(1, 3), 160);
  EXPECT_EQ(a(14, 3), 15);
  EXPECT_EQ(a(4, 5), 625);
}

TEST(IrrepTable, ValuesAtThree) {
  const int expected[] = {160, 120, 90, 81, 80, 72, 64, 60, 40, 40, 30, 20, 24, 15, 6, 10, 8};
  for (int n = 1; n <= 17; ++n) EXPECT_EQ(a(n, 3), expected[n - 1]) << n;
}

TEST(IrrepTable, Errors) {
  auto kind = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::InvalidArgument;
  };
  EXPECT_EQ(kind([] { irrep_dim(0, 3); }), ErrorKind::IndexOutOfRange);
  EXPECT_EQ(kind([] { irrep_dim(18, 3); }), ErrorKind::IndexOutOfRange);
  EXPECT_EQ(kind([] { irrep_dim(1, 2); }), ErrorKind::EvenPrime);
  EXPECT_EQ(kind([] { unitary_dims(2); }), ErrorKind::EvenPrime);
  EXPECT_EQ(kind([] { irrep_dim(1, 9); }), ErrorKind::NotPrime);
}

TEST(IrrepTable, PolynomialIdentities) {
  for (std::uint64_t p : odd_primes_up_to(100)) {
    const BigInt q(static_cast<unsigned long>(p));
    EXPECT_EQ(a(4, p), q * q * q * q);
    EXPECT_EQ(a(5, p), a(4, p) - 1);
    EXPECT_EQ(a(13, p) + a(15, p), 2 * a(14, p));
    EXPECT_EQ(a(2, p), q * a(10, p));
    for (int n = 1; n <= 17; ++n) EXPECT_GT(a(n, p), 0);
  }
}

TEST(IrrepTable, HalvedRowsAreIntegers) {
  for (std::uint64_t p : odd_primes_up_to(1000)) {
    const BigInt q(static_cast<unsigned long>(p));
    EXPECT_EQ(2 * a(13, p), q * (q + 1) * (q + 1));
    EXPECT_EQ(2 * a(14, p), q * (q * q + 1));
    EXPECT_EQ(2 * a(15, p), q * (q - 1) * (q - 1));
  }
}

TEST(IrrepTable, PairwiseDistinctExceptAtThree) {
  for (std::uint64_t p : odd_primes_up_to(100)) {
    std::set<BigInt> seen;
    for (int n = 1; n <= 17; ++n) seen.insert(a(n, p));
    if (p == 3) {
      // (p-1)^2 = p+1 only at p = 3, so a_9(3) = a_10(3) = 40.
      EXPECT_EQ(seen.size(), 16u);
      EXPECT_EQ(a(9, 3), a(10, 3));
    } else {
      EXPECT_EQ(seen.size(), 17u) << p;
    }
  }
}

TEST(UnitaryDims, OrderingAndRange) {
  const auto at3 = unitary_dims(3);
  ASSERT_EQ(at3.size(), 15u);
  EXPECT_EQ(at3.front().index, 15);
  EXPECT_EQ(at3.front().dim.value(), 6);
  EXPECT_EQ(at3.back().index, 1);
  EXPECT_EQ(at3.back().dim.value(), 160);
  // Tie at 40 broken by index.
  auto it9 = std::find_if(at3.begin(), at3.end(), [](const IndexedDim& d) { return d.index == 9; });
  EXPECT_EQ(std::next(it9)->index, 10);

  EXPECT_EQ(unitary_dims(5).front().index, 15);
  EXPECT_EQ(unitary_dims(5).front().dim.value(), 40);

  for (std::uint64_t p : odd_primes_up_to(100)) {
    const auto dims = unitary_dims(p);
    ASSERT_EQ(dims.size(), 15u);
    EXPECT_EQ(dims.front().index, 15) << p;
    EXPECT_EQ(dims.back().index, 1) << p;
    for (std::size_t i = 1; i < dims.size(); ++i) EXPECT_LE(dims[i - 1].dim, dims[i].dim);
  }
}

}  // namespace
}  // namespace siegel
