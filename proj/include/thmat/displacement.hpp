#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "thmat/dense.hpp"
#include "thmat/field.hpp"

namespace thmat {

// Which Stein operator a generator pair refers to:
//   Down: A - Z A Z^T      Up: A - Z^T A Z
// with Z the n x n down-shift.
enum class OperatorTag { Down, Up };

// n x alpha factors (stored as alpha columns of length n each) of a
// displacement G * H^T.
class GeneratorPair {
 public:
  GeneratorPair(const PrimeField& f, std::size_t n) : field_(f), n_(n) {}
  GeneratorPair(const PrimeField& f, std::size_t n, std::vector<Vec> g, std::vector<Vec> h);

  const PrimeField& field() const noexcept { return field_; }
  std::size_t n() const noexcept { return n_; }
  std::size_t width() const noexcept { return g_.size(); }
  const std::vector<Vec>& g() const noexcept { return g_; }
  const std::vector<Vec>& h() const noexcept { return h_; }

  // G * H^T as a dense matrix.
  DenseMatrix product() const;

  friend bool operator==(const GeneratorPair&, const GeneratorPair&) = default;

 private:
  PrimeField field_;
  std::size_t n_;
  std::vector<Vec> g_, h_;
};

// Concatenate columns; the product of the result is the sum of products.
GeneratorPair concat(const GeneratorPair& a, const GeneratorPair& b);

// Same product, width equal to its rank. O(n * alpha^2).
GeneratorPair compress(const GeneratorPair& gp, OpCount* ops = nullptr);

// The unique C with C - Z C Z^T = G H^T, i.e. C = sum_j L(g_j) U(h_j) with
// L(g) lower- and U(h) upper-triangular Toeplitz.
class ToeplitzLikeCore {
 public:
  explicit ToeplitzLikeCore(GeneratorPair gen) : gen_(std::move(gen)) {}

  static ToeplitzLikeCore zero(const PrimeField& f, std::size_t n);
  static ToeplitzLikeCore identity(const PrimeField& f, std::size_t n);
  static ToeplitzLikeCore down_shift(const PrimeField& f, std::size_t n);

  const GeneratorPair& gen() const noexcept { return gen_; }
  const PrimeField& field() const noexcept { return gen_.field(); }
  std::size_t n() const noexcept { return gen_.n(); }
  std::size_t width() const noexcept { return gen_.width(); }

  friend bool operator==(const ToeplitzLikeCore&, const ToeplitzLikeCore&) = default;

 private:
  GeneratorPair gen_;
};

DenseMatrix reconstruct(const ToeplitzLikeCore& c);
Vec matvec(const ToeplitzLikeCore& c, std::span<const Fe> v, OpCount* ops = nullptr);
Vec matvec_transpose(const ToeplitzLikeCore& c, std::span<const Fe> v, OpCount* ops = nullptr);
ToeplitzLikeCore add(const ToeplitzLikeCore& a, const ToeplitzLikeCore& b, OpCount* ops = nullptr);
ToeplitzLikeCore negate(const ToeplitzLikeCore& c);
ToeplitzLikeCore transpose(const ToeplitzLikeCore& c);
Fe trace(const ToeplitzLikeCore& c);
// Product through the identity
//   D(AB) = D(A) B + Z A Z^T D(B) - (Z A e_n)(Z B^T e_n)^T,
// width at most width(A) + width(B) + 1 after compression.
ToeplitzLikeCore core_multiply(const ToeplitzLikeCore& a, const ToeplitzLikeCore& b,
                               OpCount* ops = nullptr);
// Core of J C J. The up-shift displacement of C is factored from random
// samples, checked on fresh vectors, and reflected through J. Sampling is
// seeded from a hash of C and the salt, so the result is a pure function of
// its inputs. Throws CompressionFailed after three failed checks.
ToeplitzLikeCore flip_conjugate(const ToeplitzLikeCore& c, std::uint64_t salt = 0,
                                OpCount* ops = nullptr);

enum class StructureKind { ToeplitzLike, HankelLike, ToeplitzPlusHankelLike };

const char* kind_name(StructureKind k) noexcept;

// A = P + J Q with P, Q Toeplitz-like cores and J the exchange matrix.
class THMatrix {
 public:
  THMatrix(ToeplitzLikeCore p, ToeplitzLikeCore q);

  static THMatrix zero(const PrimeField& f, std::size_t n);
  static THMatrix identity(const PrimeField& f, std::size_t n);
  static THMatrix down_shift(const PrimeField& f, std::size_t n);
  static THMatrix exchange(const PrimeField& f, std::size_t n);

  const PrimeField& field() const noexcept { return p_.field(); }
  std::size_t n() const noexcept { return p_.n(); }
  const ToeplitzLikeCore& p() const noexcept { return p_; }
  const ToeplitzLikeCore& q() const noexcept { return q_; }
  std::size_t width() const noexcept { return p_.width() + q_.width(); }
  StructureKind kind() const noexcept;

  friend bool operator==(const THMatrix&, const THMatrix&) = default;

 private:
  ToeplitzLikeCore p_, q_;
};

// Toeplitz matrix T[i][j] = col[i - j] for i >= j and row[j - i] otherwise.
THMatrix from_toeplitz(const PrimeField& f, std::span<const Fe> col, std::span<const Fe> row);
// Hankel matrix H[i][j] = v[i + j], v of length 2n - 1.
THMatrix from_hankel(const PrimeField& f, std::span<const Fe> antidiag);
THMatrix random_structured(std::size_t n, std::size_t alpha_t, std::size_t alpha_h,
                           const PrimeField& f, std::uint64_t seed);

inline constexpr std::size_t kMaxReconstructDim = 4096;

DenseMatrix reconstruct(const THMatrix& a);
Vec matvec(const THMatrix& a, std::span<const Fe> v, OpCount* ops = nullptr);
Vec matvec_transpose(const THMatrix& a, std::span<const Fe> v, OpCount* ops = nullptr);
THMatrix add(const THMatrix& a, const THMatrix& b, OpCount* ops = nullptr);
THMatrix negate(const THMatrix& a);
THMatrix mul(const THMatrix& a, const THMatrix& b, OpCount* ops = nullptr);
// Square-and-multiply, k >= 1.
THMatrix power(const THMatrix& a, std::size_t k, OpCount* ops = nullptr);
THMatrix transpose(const THMatrix& a, OpCount* ops = nullptr);
Fe trace(const THMatrix& a, OpCount* ops = nullptr);

}  // namespace thmat
