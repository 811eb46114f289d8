#pragma once

#include <cstddef>
#include <optional>
#include <span>

#include "thmat/field.hpp"
#include "thmat/poly.hpp"

namespace thmat {

// Row-major rows x cols matrix over a prime field. Square in most uses;
// rectangular shapes appear as projection blocks.
class DenseMatrix {
 public:
  DenseMatrix(const PrimeField& f, std::size_t n) : DenseMatrix(f, n, n) {}
  DenseMatrix(const PrimeField& f, std::size_t rows, std::size_t cols)
      : field_(f), rows_(rows), cols_(cols), data_(rows * cols) {}

  static DenseMatrix identity(const PrimeField& f, std::size_t n);
  static DenseMatrix exchange(const PrimeField& f, std::size_t n);
  // Down-shift Z: ones on the subdiagonal.
  static DenseMatrix down_shift(const PrimeField& f, std::size_t n);
  static DenseMatrix diagonal(const PrimeField& f, std::span<const Fe> d);

  const PrimeField& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t size() const noexcept { return rows_; }
  bool square() const noexcept { return rows_ == cols_; }

  Fe& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * cols_ + j]; }
  Fe operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * cols_ + j]; }
  std::span<const Fe> row(std::size_t i) const noexcept { return {data_.data() + i * cols_, cols_}; }
  Vec column(std::size_t j) const;

  bool is_zero() const noexcept;

  friend bool operator==(const DenseMatrix& a, const DenseMatrix& b) noexcept {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  PrimeField field_;
  std::size_t rows_, cols_;
  Vec data_;
};

DenseMatrix add(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix sub(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix mul(const DenseMatrix& a, const DenseMatrix& b, OpCount* ops = nullptr);
DenseMatrix transpose(const DenseMatrix& a);
DenseMatrix power(const DenseMatrix& a, std::size_t k, OpCount* ops = nullptr);
Vec matvec(const DenseMatrix& a, std::span<const Fe> v, OpCount* ops = nullptr);
std::size_t rank(const DenseMatrix& a);
Fe determinant(DenseMatrix a, OpCount* ops = nullptr);
Fe trace(const DenseMatrix& a);
// Place the blocks along the diagonal.
DenseMatrix block_diagonal(std::span<const DenseMatrix> blocks);
// Evaluate f(A) by Horner's rule.
DenseMatrix eval_at_matrix(const Poly& f, const DenseMatrix& a);

// Exact column factorization: the returned basis B (rows x r) and
// coefficients C (r x cols) satisfy B * C = a with r = rank(a).
struct RankFactors {
  DenseMatrix basis;
  DenseMatrix coeffs;
};
RankFactors rank_factorize(const DenseMatrix& a);

}  // namespace thmat
