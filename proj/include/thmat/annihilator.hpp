#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "thmat/dense.hpp"
#include "thmat/displacement.hpp"
#include "thmat/error.hpp"
#include "thmat/poly.hpp"

namespace thmat {

// beta columns of length n.
using Block = std::vector<Vec>;

// Schedule for the projected Krylov sequence: block size, giant stride
// (number of stored baby steps) and sequence length.
struct BsgsPlan {
  std::size_t beta = 1;
  std::size_t stride = 1;
  std::size_t length = 2;

  // stride = ceil(sqrt(2n)) clamped to the length, length = 2 ceil(n/beta) + 2.
  static BsgsPlan defaults(std::size_t n, std::size_t beta);
  // Throws BadPlan unless stride >= 1, length >= 2, beta >= 1, stride <= length.
  void validate() const;
};

struct Projectors {
  Block u;
  Block v;
};

// Columns Z^j t and Z^j t' for random t, t' (the first beta columns of
// random lower triangular Toeplitz matrices).
Projectors structured_projectors(std::size_t n, std::size_t beta, const PrimeField& f,
                                 std::uint64_t seed);

// S_0 .. S_{L-1}, S_i = U^T A^i V, each beta x beta.
struct BlockSequence {
  std::size_t beta = 0;
  std::vector<DenseMatrix> terms;

  std::size_t length() const noexcept { return terms.size(); }
  friend bool operator==(const BlockSequence&, const BlockSequence&) = default;
};

BlockSequence krylov_sequence_naive(const THMatrix& a, const Block& u, const Block& v,
                                    std::size_t length, OpCount* ops = nullptr);
// Babies A^i V for i < stride, giants U^T B^j with B = A^stride; output is
// identical to the naive sequence.
BlockSequence bsgs_sequence(const THMatrix& a, const Block& u, const Block& v, const BsgsPlan& plan,
                            OpCount* ops = nullptr);

// Square matrix of polynomials, row-major.
class PolyMatrix {
 public:
  PolyMatrix(const PrimeField& f, std::size_t dim);

  const PrimeField& field() const noexcept { return field_; }
  std::size_t dim() const noexcept { return dim_; }
  const Poly& operator()(std::size_t i, std::size_t j) const noexcept { return entries_[i * dim_ + j]; }
  Poly& operator()(std::size_t i, std::size_t j) noexcept { return entries_[i * dim_ + j]; }
  // Max entry degree, kNegInfDegree for the zero matrix.
  std::ptrdiff_t degree() const noexcept;
  std::ptrdiff_t row_degree(std::size_t i) const noexcept;
  DenseMatrix eval(Fe x) const;

  friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

 private:
  PrimeField field_;
  std::size_t dim_;
  std::vector<Poly> entries_;
};

// Row-reduced F(x) = sum_t F_t x^t of minimal row degrees with
// sum_t F_t S_{i+t} = 0 at every applicable offset of each row. Computed as
// an order basis of [S(x); -I] at order L, one order per step. For beta = 1
// the result is monic. Throws InsufficientLength when L < 2 ceil(dbound /
// beta) + 1 or fewer than beta generator rows emerge.
PolyMatrix minimal_matrix_generator(const BlockSequence& seq, std::size_t dbound,
                                    OpCount* ops = nullptr);

// True iff every row of F annihilates seq at its applicable offsets.
bool generator_annihilates(const PolyMatrix& f, const BlockSequence& seq);

// Monic det F by evaluation at beta * deg F + 1 points and interpolation.
Poly polymat_det(const PolyMatrix& f, OpCount* ops = nullptr);

struct AnnihilatorReport {
  Poly polynomial;
  std::string algorithm;
  std::uint64_t seed = 0;
  bool verified = false;
  std::uint64_t field_mult_count = 0;
};

enum class SequenceMode { Naive, Bsgs };

// Monte Carlo minimal polynomial (scalar Wiedemann, sequence length 2n + 2).
// Equals the true minimal polynomial with probability >= 1 - 4n/p.
AnnihilatorReport minpoly(const THMatrix& a, std::uint64_t seed, SequenceMode mode = SequenceMode::Bsgs,
                          std::size_t verify_trials = 2);

// Thrown by charpoly_generic when the block generator does not certify a
// degree-n characteristic polynomial. Carries the divisor found.
class NotGenericError : public Error {
 public:
  NotGenericError(Poly partial, const std::string& why)
      : Error(Errc::NotGeneric, why), partial_(std::move(partial)) {}
  const Poly& partial() const noexcept { return partial_; }
  std::ptrdiff_t found_degree() const noexcept { return partial_.degree(); }

 private:
  Poly partial_;
};

// Block Wiedemann characteristic polynomial for generic inputs. Success
// implies degree n, monic, x^(n-1) coefficient equal to -trace(A) and
// acceptance by verify_annihilates with three trials.
AnnihilatorReport charpoly_generic(const THMatrix& a, std::size_t beta, std::uint64_t seed);

// Checks f(A) b = 0 for `trials` random b. Never rejects a true annihilator.
bool verify_annihilates(const THMatrix& a, const Poly& f, std::size_t trials, std::uint64_t seed,
                        OpCount* ops = nullptr);

}  // namespace thmat
