#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace siegel {

using BigInt = mpz_class;

/// Reduced fraction of arbitrary-precision integers. The denominator is
/// always positive and coprime to the numerator; every operation returns a
/// reduced value, so equality is structural.
class ExactRational {
 public:
  ExactRational() = default;
  ExactRational(std::int64_t n);  // NOLINT(google-explicit-constructor)
  ExactRational(const BigInt& n);  // NOLINT(google-explicit-constructor)
  ExactRational(const BigInt& numerator, const BigInt& denominator);

  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  ExactRational& operator+=(const ExactRational& rhs);
  ExactRational& operator-=(const ExactRational& rhs);
  ExactRational& operator*=(const ExactRational& rhs);
  ExactRational& operator/=(const ExactRational& rhs);

  friend ExactRational operator+(ExactRational lhs, const ExactRational& rhs) { return lhs += rhs; }
  friend ExactRational operator-(ExactRational lhs, const ExactRational& rhs) { return lhs -= rhs; }
  friend ExactRational operator*(ExactRational lhs, const ExactRational& rhs) { return lhs *= rhs; }
  friend ExactRational operator/(ExactRational lhs, const ExactRational& rhs) { return lhs /= rhs; }
  ExactRational operator-() const;

  friend bool operator==(const ExactRational& a, const ExactRational& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const ExactRational& a, const ExactRational& b) {
    return cmp(a.value_, b.value_) <=> 0;
  }

  /// `n` for integers, `n/d` otherwise; no spaces.
  std::string to_string() const;

  /// Floor and ceiling, for presenting integer envelopes of bounds.
  BigInt floor() const;
  BigInt ceil() const;

 private:
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const ExactRational& r);

/// Base-10 rendering of a big integer, no separators.
std::string to_string(const BigInt& n);
/// Base-10 rendering with comma thousands grouping ("69,023,360").
std::string to_grouped_string(const BigInt& n);

/// Integer power of a rational (non-negative exponent) or its reciprocal
/// power (negative exponent).
ExactRational pow(const ExactRational& base, int exponent);

/// Deterministic Miller-Rabin. Exact for every 64-bit input (the witness set
/// {2, 3, ..., 37} is sound below 3.3e24).
bool is_prime(std::uint64_t n);

/// (a/p) by Euler's criterion. Throws NotPrime / EvenPrime for bad p.
int legendre_symbol(std::int64_t a, std::uint64_t p);

/// An odd square-free level N = p1 * ... * pn with p1 < ... < pn.
class SquareFreeLevel {
 public:
  std::span<const std::uint64_t> primes() const { return primes_; }
  std::uint64_t value() const { return value_; }
  bool divisible_by(std::uint64_t p) const;

  friend bool operator==(const SquareFreeLevel&, const SquareFreeLevel&) = default;

 private:
  friend SquareFreeLevel parse_square_free_level(std::uint64_t n);
  std::vector<std::uint64_t> primes_;
  std::uint64_t value_ = 0;
};

/// Factors N by trial division. Throws InvalidArgument for N < 3, EvenLevel
/// when 2 | N and NotSquareFree (naming the prime) when p^2 | N.
SquareFreeLevel parse_square_free_level(std::uint64_t n);

/// Checks p is an odd prime; throws EvenPrime or NotPrime otherwise.
void require_odd_prime(std::uint64_t p);

}  // namespace siegel
