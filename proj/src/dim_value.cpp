#include "siegel/dim_value.hpp"

#include <string>
#include <utility>

#include "siegel/error.hpp"

namespace siegel {

Weight::Weight(int k) : k_(k) {
  if (k < 1) throw Error(ErrorKind::WeightOutOfRange, "weight must be positive, got " + std::to_string(k));
}

DimValue::DimValue(BigInt value) : value_(std::move(value)) {
  if (value_ < 0) {
    throw Error(ErrorKind::IntegralityFailure, "negative dimension " + value_.get_str());
  }
}

DimValue DimValue::from_rational(const ExactRational& r, std::string_view what) {
  if (!r.is_integer()) {
    throw Error(ErrorKind::IntegralityFailure,
                std::string(what) + " evaluated to the non-integer " + r.to_string());
  }
  if (r.sign() < 0) {
    throw Error(ErrorKind::IntegralityFailure, std::string(what) + " evaluated to " + r.to_string());
  }
  return DimValue(r.numerator());
}

}  // namespace siegel
