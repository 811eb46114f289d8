#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace thmat {

namespace detail {
__extension__ typedef unsigned __int128 u128;
}  // namespace detail


// Canonical residue in [0, p). Only PrimeField produces values, so the
// invariant holds for every element that leaves the library.
struct Fe {
  std::uint64_t v = 0;

  constexpr Fe() = default;
  constexpr explicit Fe(std::uint64_t value) : v(value) {}

  friend constexpr bool operator==(Fe, Fe) = default;
  friend constexpr auto operator<=>(Fe, Fe) = default;
};

using Vec = std::vector<Fe>;

// Explicit accumulator for field multiplications. Threaded through calls as
// a nullable pointer; nothing in the library keeps a global counter.
struct OpCount {
  std::uint64_t mults = 0;
};

inline void tally(OpCount* ops, std::uint64_t k) noexcept {
  if (ops) ops->mults += k;
}

bool is_prime_u64(std::uint64_t n) noexcept;

// Arithmetic modulo a word-size prime 2 < p < 2^62. Immutable, cheap to copy.
class PrimeField {
 public:
  static constexpr std::uint64_t kDefaultModulus = 2013265921;  // 15 * 2^27 + 1
  static constexpr int kMinNttLog = 20;

  explicit PrimeField(std::uint64_t p = kDefaultModulus);

  std::uint64_t modulus() const noexcept { return p_; }
  bool ntt_capable() const noexcept { return two_adicity_ >= kMinNttLog; }
  // 2-adic valuation k of p - 1, and a primitive 2^k-th root of unity.
  int two_adicity() const noexcept { return two_adicity_; }
  Fe root_of_unity() const noexcept { return root_; }
  // Primitive 2^log-th root of unity; requires log <= two_adicity().
  Fe root_of_unity(int log) const;

  Fe elem(std::uint64_t x) const noexcept { return Fe(x % p_); }
  Fe elem_signed(std::int64_t x) const noexcept;
  Fe zero() const noexcept { return Fe(0); }
  Fe one() const noexcept { return Fe(1); }

  Fe add(Fe a, Fe b) const noexcept {
    std::uint64_t s = a.v + b.v;
    return Fe(s >= p_ ? s - p_ : s);
  }
  Fe sub(Fe a, Fe b) const noexcept { return Fe(a.v >= b.v ? a.v - b.v : a.v + p_ - b.v); }
  Fe neg(Fe a) const noexcept { return Fe(a.v == 0 ? 0 : p_ - a.v); }
  Fe mul(Fe a, Fe b) const noexcept {
    if (small_) return Fe((a.v * b.v) % p_);
    return Fe(static_cast<std::uint64_t>(
        (static_cast<detail::u128>(a.v) * b.v) % p_));
  }
  // a + b * c
  Fe mul_add(Fe a, Fe b, Fe c) const noexcept { return add(a, mul(b, c)); }
  Fe pow(Fe a, std::uint64_t e) const noexcept;
  Fe inv(Fe a) const;

  bool operator==(const PrimeField& o) const noexcept { return p_ == o.p_; }

 private:
  std::uint64_t p_;
  bool small_;
  int two_adicity_ = 0;
  Fe root_{1};
};

// Elementwise inverses with one inversion and 3(len - 1) multiplications.
Vec batch_inv(const PrimeField& f, std::span<const Fe> v, OpCount* ops = nullptr);

}  // namespace thmat
