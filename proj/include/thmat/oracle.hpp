#pragma once

#include <cstddef>
#include <optional>
#include <span>

#include "thmat/dense.hpp"
#include "thmat/displacement.hpp"
#include "thmat/poly.hpp"

// Dense brute-force references. Deliberately simple and cubic or worse;
// every structured routine is checked against these.
namespace thmat::oracle {

inline constexpr std::size_t kMaxOracleDim = 256;

// det(xI - A) via Hessenberg reduction and the Hessenberg determinant
// recurrence.
Poly dense_charpoly(const DenseMatrix& a, OpCount* ops = nullptr);

// lcm over the standard basis of the Krylov annihilators A^k e_i.
Poly dense_minpoly(const DenseMatrix& a, OpCount* ops = nullptr);

DenseMatrix stein_displacement(const DenseMatrix& a, OperatorTag tag);
std::size_t displacement_rank(const DenseMatrix& a, OperatorTag tag);

// P-only structured form of width rank(A - Z A Z^T).
THMatrix dense_to_structured(const DenseMatrix& a);

inline constexpr std::uint64_t kLfsrSearchGuard = 1'000'000;

// Smallest-degree monic g with g annihilating s at every applicable offset,
// by enumerating all monic polynomials of degree 0..max_degree. nullopt if
// none exists in that range.
std::optional<Poly> exhaustive_lfsr(const PrimeField& f, std::span<const Fe> s,
                                    std::size_t max_degree);

}  // namespace thmat::oracle
