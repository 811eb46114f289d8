#include "thmat/field.hpp"

#include <string>

#include "thmat/error.hpp"

namespace thmat {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::NotPrime: return "NotPrime";
    case Errc::TooSmall: return "TooSmall";
    case Errc::TooLarge: return "TooLarge";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::DuplicatePoint: return "DuplicatePoint";
    case Errc::BothZero: return "BothZero";
    case Errc::EmptySequence: return "EmptySequence";
    case Errc::CornerMismatch: return "CornerMismatch";
    case Errc::BadLength: return "BadLength";
    case Errc::CompressionFailed: return "CompressionFailed";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::BadBlockSize: return "BadBlockSize";
    case Errc::ShapeMismatch: return "ShapeMismatch";
    case Errc::InsufficientLength: return "InsufficientLength";
    case Errc::FieldTooSmall: return "FieldTooSmall";
    case Errc::SingularEverywhere: return "SingularEverywhere";
    case Errc::NotGeneric: return "NotGeneric";
    case Errc::GuardExceeded: return "GuardExceeded";
    case Errc::BadPlan: return "BadPlan";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::Parse: return "Parse";
  }
  return "Unknown";
}

namespace {

using detail::u128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) noexcept {
  if (n < 2) return false;
  static constexpr std::uint64_t kBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (std::uint64_t b : kBases) {
    if (n % b == 0) return n == b;
  }
  std::uint64_t d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  // These twelve bases are a deterministic witness set below 3.3e24.
  for (std::uint64_t a : kBases) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < r; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint64_t p) : p_(p), small_(p < (1ULL << 32)) {
  if (p >= (1ULL << 62)) throw Error(Errc::TooLarge, "modulus " + std::to_string(p) + " >= 2^62");
  if (p <= 2) throw Error(Errc::TooSmall, "modulus " + std::to_string(p) + " must exceed 2");
  if (!is_prime_u64(p)) throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");

  std::uint64_t odd = p - 1;
  while ((odd & 1) == 0) {
    odd >>= 1;
    ++two_adicity_;
  }
  // c^odd has order exactly 2^k iff c is a quadratic non-residue.
  for (std::uint64_t c = 2; c < p; ++c) {
    if (powmod(c, (p - 1) / 2, p) == p - 1) {
      root_ = Fe(powmod(c, odd, p));
      break;
    }
  }
}

Fe PrimeField::root_of_unity(int log) const {
  if (log < 0 || log > two_adicity_)
    throw Error(Errc::TooLarge, "no root of unity of order 2^" + std::to_string(log));
  Fe w = root_;
  for (int i = log; i < two_adicity_; ++i) w = mul(w, w);
  return w;
}

Fe PrimeField::elem_signed(std::int64_t x) const noexcept {
  const auto m = static_cast<std::int64_t>(p_);
  std::int64_t r = x % m;
  if (r < 0) r += m;
  return Fe(static_cast<std::uint64_t>(r));
}

Fe PrimeField::pow(Fe a, std::uint64_t e) const noexcept {
  Fe r = one();
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

Fe PrimeField::inv(Fe a) const {
  if (a.v == 0) throw Error(Errc::DivisionByZero, "inverse of zero");
  // Extended Euclid on signed 64-bit; |coefficients| stay below p < 2^62.
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(p_), new_r = static_cast<std::int64_t>(a.v);
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  return elem_signed(t);
}

Vec batch_inv(const PrimeField& f, std::span<const Fe> v, OpCount* ops) {
  const std::size_t n = v.size();
  Vec out(n);
  if (n == 0) return out;
  Vec prefix(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (v[i].v == 0) throw Error(Errc::DivisionByZero, "zero entry at index " + std::to_string(i));
    prefix[i] = i == 0 ? v[0] : f.mul(prefix[i - 1], v[i]);
  }
  Fe acc = f.inv(prefix[n - 1]);
  for (std::size_t i = n - 1; i > 0; --i) {
    out[i] = f.mul(acc, prefix[i - 1]);
    acc = f.mul(acc, v[i]);
  }
  out[0] = acc;
  tally(ops, 3 * (n - 1));
  return out;
}

}  // namespace thmat
