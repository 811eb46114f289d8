#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>

#include "thmat/field.hpp"

namespace thmat {

// Degree of the zero polynomial.
inline constexpr std::ptrdiff_t kNegInfDegree = PTRDIFF_MIN;

// Dense univariate polynomial, coefficient i multiplies x^i. Always
// normalized: no trailing zero coefficients, zero is the empty sequence.
class Poly {
 public:
  explicit Poly(const PrimeField& f) : field_(f) {}
  Poly(const PrimeField& f, Vec coeffs);
  Poly(const PrimeField& f, std::initializer_list<std::uint64_t> coeffs);

  static Poly constant(const PrimeField& f, Fe c);
  // c * x^k
  static Poly monomial(const PrimeField& f, std::size_t k, Fe c);
  // x - r
  static Poly linear_root(const PrimeField& f, Fe r);

  const PrimeField& field() const noexcept { return field_; }
  const Vec& coeffs() const noexcept { return coeffs_; }
  std::size_t size() const noexcept { return coeffs_.size(); }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  std::ptrdiff_t degree() const noexcept {
    return coeffs_.empty() ? kNegInfDegree : static_cast<std::ptrdiff_t>(coeffs_.size()) - 1;
  }
  Fe operator[](std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : Fe(0); }
  Fe leading() const noexcept { return coeffs_.empty() ? Fe(0) : coeffs_.back(); }
  bool is_monic() const noexcept { return !coeffs_.empty() && coeffs_.back() == Fe(1); }
  Fe eval(Fe x) const noexcept;

  friend bool operator==(const Poly& a, const Poly& b) noexcept {
    return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
  }

 private:
  void normalize() noexcept;

  PrimeField field_;
  Vec coeffs_;
};

enum class MulAlgo { Auto, Schoolbook, Karatsuba, Ntt };

// Raw linear convolution, result length a.size() + b.size() - 1 (empty if
// either input is empty). Ntt requires an NTT-capable field of sufficient
// two-adicity; Auto picks NTT when possible and Karatsuba otherwise.
Vec convolve(const PrimeField& f, std::span<const Fe> a, std::span<const Fe> b,
             MulAlgo algo = MulAlgo::Auto, OpCount* ops = nullptr);

Poly add(const Poly& a, const Poly& b);
Poly sub(const Poly& a, const Poly& b);
Poly neg(const Poly& a);
Poly scale(const Poly& a, Fe c);
Poly mul(const Poly& a, const Poly& b, MulAlgo algo = MulAlgo::Auto, OpCount* ops = nullptr);
Poly make_monic(const Poly& a);

struct DivRem {
  Poly quotient;
  Poly remainder;
};
DivRem divrem(const Poly& a, const Poly& b, OpCount* ops = nullptr);

Poly gcd(const Poly& a, const Poly& b);
Poly lcm(const Poly& a, const Poly& b);

Vec eval_many(const Poly& f, std::span<const Fe> points, OpCount* ops = nullptr);
Poly interpolate(const PrimeField& f, std::span<const Fe> points, std::span<const Fe> values,
                 OpCount* ops = nullptr);

// Monic minimal-degree generator g of s: sum_t g_t s_{i+t} = 0 for every
// 0 <= i <= len - 1 - deg g. Exact whenever the true generator degree is at
// most len / 2.
Poly berlekamp_massey(const PrimeField& f, std::span<const Fe> s, OpCount* ops = nullptr);

// True iff g annihilates s at every applicable offset.
bool annihilates_sequence(const Poly& g, std::span<const Fe> s);

}  // namespace thmat
