#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "thmat/field.hpp"

namespace thmat {

// Column echelon basis of a list of equal-length vectors. Basis vector k is
// zero at the pivots of every earlier basis vector and nonzero at its own
// pivot; input column j equals sum_k coeffs[j][k] * basis[k].
struct ColumnBasis {
  std::vector<Vec> basis;
  std::vector<std::size_t> pivots;
  std::vector<Vec> coeffs;

  std::size_t rank() const noexcept { return basis.size(); }
};

ColumnBasis column_basis(const PrimeField& f, std::span<const Vec> cols, OpCount* ops = nullptr);

}  // namespace thmat
