#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace siegel {

enum class ErrorKind {
  InvalidArgument,
  WeightOutOfRange,
  EvenLevel,
  NotSquareFree,
  NotPrime,
  EvenPrime,
  IndexOutOfRange,
  NotTabulated,
  TooManySolutions,
  IntegralityFailure,
};

std::string_view to_string(ErrorKind kind);

// Every failure in the library surfaces as this exception. IntegralityFailure
// marks an internal inconsistency; everything else is a domain error.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }
  bool is_internal() const noexcept { return kind_ == ErrorKind::IntegralityFailure; }

 private:
  ErrorKind kind_;
};

}  // namespace siegel
