#include "siegel/error.hpp"

namespace siegel {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::WeightOutOfRange: return "WeightOutOfRange";
    case ErrorKind::EvenLevel: return "EvenLevel";
    case ErrorKind::NotSquareFree: return "NotSquareFree";
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::EvenPrime: return "EvenPrime";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::NotTabulated: return "NotTabulated";
    case ErrorKind::TooManySolutions: return "TooManySolutions";
    case ErrorKind::IntegralityFailure: return "IntegralityFailure";
  }
  return "Unknown";
}

}  // namespace siegel
