#include <gtest/gtest.h>

#include <cstdint>
#include <random>
#include <set>

#include "siegel/error.hpp"
#include "siegel/exact_arith.hpp"

namespace siegel {
namespace {

bool trial_division_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::InvalidArgument;
}

TEST(ExactRational, AlwaysReduced) {
  const ExactRational r(BigInt(6), BigInt(-8));
  EXPECT_EQ(r.numerator(), -3);
  EXPECT_EQ(r.denominator(), 4);
  EXPECT_EQ(r.to_string(), "-3/4");
  EXPECT_EQ(ExactRational(BigInt(10), BigInt(5)).to_string(), "2");
  EXPECT_EQ(ExactRational(1, 2) + ExactRational(1, 2), ExactRational(1));
}

TEST(ExactRational, ZeroDenominatorRejected) {
  EXPECT_EQ(kind_of([] { ExactRational(BigInt(1), BigInt(0)); }), ErrorKind::InvalidArgument);
  EXPECT_EQ(kind_of([] { (void)(ExactRational(1) / ExactRational(0)); }), ErrorKind::InvalidArgument);
}

TEST(ExactRational, FloorCeil) {
  EXPECT_EQ(ExactRational(5, 2).floor(), 2);
  EXPECT_EQ(ExactRational(5, 2).ceil(), 3);
  EXPECT_EQ(ExactRational(-5, 2).floor(), -3);
  EXPECT_EQ(ExactRational(3, 32).ceil(), 1);
}

TEST(ExactRational, RandomArithmeticProperties) {
  std::mt19937_64 rng(20261018);
  std::uniform_int_distribution<std::int64_t> num(-1'000'000, 1'000'000);
  std::uniform_int_distribution<std::int64_t> den(1, 1'000'000);
  for (int i = 0; i < 2000; ++i) {
    const ExactRational r(BigInt(static_cast<long>(num(rng))), BigInt(static_cast<long>(den(rng))));
    const ExactRational s(BigInt(static_cast<long>(num(rng))), BigInt(static_cast<long>(den(rng))));
    for (const ExactRational& v : {r + s, r - s, r * s}) {
      EXPECT_EQ(gcd(abs(v.numerator()), v.denominator()), 1);
      EXPECT_GE(v.denominator(), 1);
    }
    EXPECT_EQ((r + s) - s, r);
    if (s.sign() != 0) EXPECT_EQ((r / s) * s, r);
  }
}

TEST(BigIntFormatting, Grouping) {
  EXPECT_EQ(to_grouped_string(BigInt("69023360250000000")), "69,023,360,250,000,000");
  EXPECT_EQ(to_grouped_string(BigInt(15)), "15");
  EXPECT_EQ(to_grouped_string(BigInt(-1234)), "-1,234");
}

TEST(IsPrime, Examples) {
  EXPECT_TRUE(is_prime(13));
  EXPECT_FALSE(is_prime(15));
  EXPECT_TRUE(is_prime(2));
  EXPECT_FALSE(is_prime(1));
  EXPECT_FALSE(is_prime(0));
}

TEST(IsPrime, MatchesTrialDivision) {
  for (std::uint64_t n = 0; n <= 100'000; ++n) ASSERT_EQ(is_prime(n), trial_division_prime(n)) << n;
}

TEST(IsPrime, LargeKnownValues) {
  EXPECT_TRUE(is_prime(18446744073709551557ULL));  // largest 64-bit prime
  EXPECT_FALSE(is_prime(18446744073709551557ULL - 2));
  EXPECT_FALSE(is_prime(3215031751ULL));  // strong pseudoprime to bases 2, 3, 5, 7
  EXPECT_FALSE(is_prime(4294967297ULL));  // 641 * 6700417
}

TEST(Legendre, Examples) {
  EXPECT_EQ(legendre_symbol(-1, 7), -1);
  EXPECT_EQ(legendre_symbol(2, 7), 1);
  EXPECT_EQ(legendre_symbol(3, 7), -1);
  EXPECT_EQ(legendre_symbol(14, 7), 0);
}

TEST(Legendre, RejectsBadModulus) {
  EXPECT_EQ(kind_of([] { legendre_symbol(1, 2); }), ErrorKind::EvenPrime);
  EXPECT_EQ(kind_of([] { legendre_symbol(1, 9); }), ErrorKind::NotPrime);
}

TEST(Legendre, MatchesSquareEnumeration) {
  for (std::uint64_t p = 3; p <= 50; p += 2) {
    if (!trial_division_prime(p)) continue;
    std::set<std::int64_t> squares;
    for (std::int64_t x = 1; x < static_cast<std::int64_t>(p); ++x) squares.insert(x * x % static_cast<std::int64_t>(p));
    for (std::int64_t a = -2 * static_cast<std::int64_t>(p); a <= 2 * static_cast<std::int64_t>(p); ++a) {
      std::int64_t r = a % static_cast<std::int64_t>(p);
      if (r < 0) r += static_cast<std::int64_t>(p);
      const int expected = r == 0 ? 0 : (squares.count(r) ? 1 : -1);
      ASSERT_EQ(legendre_symbol(a, p), expected) << a << " mod " << p;
    }
  }
}

TEST(Legendre, Multiplicative) {
  for (std::uint64_t p = 3; p <= 100; p += 2) {
    if (!trial_division_prime(p)) continue;
    for (std::int64_t a = -30; a <= 30; ++a) {
      for (std::int64_t b = -30; b <= 30; ++b) {
        ASSERT_EQ(legendre_symbol(a * b, p), legendre_symbol(a, p) * legendre_symbol(b, p));
      }
    }
  }
}

TEST(SquareFreeLevel, Examples) {
  const auto l15 = parse_square_free_level(15);
  EXPECT_EQ(std::vector<std::uint64_t>(l15.primes().begin(), l15.primes().end()), (std::vector<std::uint64_t>{3, 5}));
  EXPECT_EQ(l15.value(), 15u);
  const auto l105 = parse_square_free_level(105);
  EXPECT_EQ(std::vector<std::uint64_t>(l105.primes().begin(), l105.primes().end()),
            (std::vector<std::uint64_t>{3, 5, 7}));
  EXPECT_TRUE(l105.divisible_by(7));
  EXPECT_FALSE(l105.divisible_by(11));
}

TEST(SquareFreeLevel, Errors) {
  EXPECT_EQ(kind_of([] { parse_square_free_level(9); }), ErrorKind::NotSquareFree);
  EXPECT_EQ(kind_of([] { parse_square_free_level(30); }), ErrorKind::EvenLevel);
  EXPECT_EQ(kind_of([] { parse_square_free_level(1); }), ErrorKind::InvalidArgument);
  try {
    parse_square_free_level(3 * 25 * 7);
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("5^2"), std::string::npos) << e.what();
  }
}

TEST(SquareFreeLevel, AgreesWithBruteForce) {
  for (std::uint64_t n = 3; n <= 10'000; ++n) {
    bool square_free = true;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
      if (n % (d * d) == 0) square_free = false;
    }
    const bool expected = n % 2 == 1 && square_free;
    bool parsed = true;
    try {
      const SquareFreeLevel level = parse_square_free_level(n);
      std::uint64_t product = 1;
      std::uint64_t previous = 2;
      for (std::uint64_t p : level.primes()) {
        ASSERT_TRUE(trial_division_prime(p));
        ASSERT_GT(p, previous);
        previous = p;
        product *= p;
      }
      ASSERT_EQ(product, n);
    } catch (const Error&) {
      parsed = false;
    }
    ASSERT_EQ(parsed, expected) << n;
  }
}

}  // namespace
}  // namespace siegel
