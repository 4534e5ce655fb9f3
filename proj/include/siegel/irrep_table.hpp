#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "siegel/dim_value.hpp"

namespace siegel {

inline constexpr int kIrrepCount = 17;
inline constexpr int kUnitaryIrrepCount = 15;

/// One row of the dimension table of non-trivial irreducible representations
/// of GSp(4, F_p): a polynomial in p, possibly halved.
struct IrrepEntry {
  int index;                 // 1..17
  std::string_view formula;  // printable form, e.g. "(p^2+1)(p+1)^2"
  bool unitary_relevant;     // false exactly for 16 and 17

  DimValue dim_at(std::uint64_t p) const;
};

std::span<const IrrepEntry> irrep_table();

/// Row `index` (1-based). Throws IndexOutOfRange.
const IrrepEntry& irrep_entry(int index);

/// a_n(p). Throws IndexOutOfRange, EvenPrime or NotPrime.
DimValue irrep_dim(int index, std::uint64_t p);

struct IndexedDim {
  int index;
  DimValue dim;
  friend bool operator==(const IndexedDim&, const IndexedDim&) = default;
};

/// a_1..a_15 at p, ascending by dimension, ties by index.
std::vector<IndexedDim> unitary_dims(std::uint64_t p);

}  // namespace siegel
