#include "siegel/irrep_table.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "siegel/error.hpp"

namespace siegel {

namespace {

// Unhalved polynomial of each row; rows 13-15 are halved after an evenness check.
BigInt row_polynomial(int index, const BigInt& p) {
  const BigInt p2 = p * p;
  switch (index) {
    case 1: return (p2 + 1) * (p + 1) * (p + 1);
    case 2: return p * (p2 + 1) * (p + 1);
    case 3: return p2 * (p2 + 1);
    case 4: return p2 * p2;
    case 5: return p2 * p2 - 1;
    case 6: return p2 * (p2 - 1);
    case 7: return (p2 - 1) * (p2 - 1);
    case 8: return p * (p2 + 1) * (p - 1);
    case 9: return (p2 + 1) * (p - 1) * (p - 1);
    case 10: return (p2 + 1) * (p + 1);
    case 11: return p * (p2 + 1);
    case 12: return (p2 + 1) * (p - 1);
    case 13: return p * (p + 1) * (p + 1);
    case 14: return p * (p2 + 1);
    case 15: return p * (p - 1) * (p - 1);
    case 16: return p2 + 1;
    case 17: return p2 - 1;
    default: break;
  }
  throw Error(ErrorKind::IndexOutOfRange, "irrep index " + std::to_string(index));
}

constexpr bool is_halved(int index) { return index >= 13 && index <= 15; }

constexpr std::array<IrrepEntry, kIrrepCount> kTable = {{
    {1, "(p^2+1)(p+1)^2", true},
    {2, "p(p^2+1)(p+1)", true},
    {3, "p^2(p^2+1)", true},
    {4, "p^4", true},
    {5, "p^4-1", true},
    {6, "p^2(p^2-1)", true},
    {7, "(p^2-1)^2", true},
    {8, "p(p^2+1)(p-1)", true},
    {9, "(p^2+1)(p-1)^2", true},
    {10, "(p^2+1)(p+1)", true},
    {11, "p(p^2+1)", true},
    {12, "(p^2+1)(p-1)", true},
    {13, "1/2 p(p+1)^2", true},
    {14, "1/2 p(p^2+1)", true},
    {15, "1/2 p(p-1)^2", true},
    {16, "p^2+1", false},
    {17, "p^2-1", false},
}};

}  // namespace

DimValue IrrepEntry::dim_at(std::uint64_t p) const {
  require_odd_prime(p);
  BigInt value = row_polynomial(index, BigInt(static_cast<unsigned long>(p)));
  if (is_halved(index)) {
    if (value % 2 != 0) {
      throw Error(ErrorKind::IntegralityFailure,
                  "a_" + std::to_string(index) + "(" + std::to_string(p) + ") is not an integer");
    }
    value /= 2;
  }
  return DimValue(std::move(value));
}

std::span<const IrrepEntry> irrep_table() { return kTable; }

const IrrepEntry& irrep_entry(int index) {
  if (index < 1 || index > kIrrepCount) {
    throw Error(ErrorKind::IndexOutOfRange,
                "irrep index " + std::to_string(index) + " is outside 1.." + std::to_string(kIrrepCount));
  }
  return kTable[static_cast<std::size_t>(index - 1)];
}

DimValue irrep_dim(int index, std::uint64_t p) { return irrep_entry(index).dim_at(p); }

std::vector<IndexedDim> unitary_dims(std::uint64_t p) {
  std::vector<IndexedDim> out;
  out.reserve(kUnitaryIrrepCount);
  for (const IrrepEntry& e : kTable) {
    if (e.unitary_relevant) out.push_back({e.index, e.dim_at(p)});
  }
  std::sort(out.begin(), out.end(), [](const IndexedDim& a, const IndexedDim& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.index < b.index;
  });
  return out;
}

}  // namespace siegel
