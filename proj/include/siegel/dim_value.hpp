#pragma once

#include <compare>
#include <string>
#include <string_view>

#include "siegel/exact_arith.hpp"

namespace siegel {

/// Weight k of a space of cusp forms. Each operation enforces its own lower
/// bound on k; construction only rejects k < 1.
class Weight {
 public:
  explicit Weight(int k);
  int value() const { return k_; }
  friend auto operator<=>(const Weight&, const Weight&) = default;

 private:
  int k_;
};

/// Non-negative integer dimension of a space of forms.
class DimValue {
 public:
  DimValue() = default;
  /// Throws IntegralityFailure if `value` is negative.
  explicit DimValue(BigInt value);

  /// Throws IntegralityFailure unless `r` reduces to a non-negative integer.
  /// `what` names the computation in the error message.
  static DimValue from_rational(const ExactRational& r, std::string_view what);

  const BigInt& value() const { return value_; }
  std::string to_string() const { return value_.get_str(); }
  ExactRational as_rational() const { return ExactRational(value_); }

  friend bool operator==(const DimValue& a, const DimValue& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const DimValue& a, const DimValue& b) {
    return cmp(a.value_, b.value_) <=> 0;
  }

 private:
  BigInt value_ = 0;
};

}  // namespace siegel
