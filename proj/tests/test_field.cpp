#include <doctest.h>

#include "support.hpp"
#include "thmat/field.hpp"

using namespace thmat;
using namespace thmat::testing;

TEST_SUITE("field") {

TEST_CASE("construction and NTT capability") {
  const PrimeField f7(7);
  CHECK(f7.modulus() == 7);
  CHECK_FALSE(f7.ntt_capable());
  CHECK(f7.two_adicity() == 1);

  const PrimeField big(2013265921);
  CHECK(big.ntt_capable());
  CHECK(big.two_adicity() == 27);
  // A primitive 2^27-th root: order exactly 2^27.
  const Fe w = big.root_of_unity();
  CHECK(big.pow(w, 1ULL << 27) == big.one());
  CHECK(big.pow(w, 1ULL << 26) != big.one());

  CHECK_ERRC(PrimeField(9), Errc::NotPrime);
  CHECK_ERRC(PrimeField(1ULL << 62), Errc::TooLarge);
  CHECK_ERRC(PrimeField(2), Errc::TooSmall);
}

TEST_CASE("primality against trial division") {
  auto trial = [](std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  };
  for (std::uint64_t n = 0; n < 5000; ++n) CHECK(is_prime_u64(n) == trial(n));
  CHECK(is_prime_u64(2305843009213693951ULL));       // 2^61 - 1
  CHECK_FALSE(is_prime_u64(3215031751ULL));          // strong pseudoprime to 2,3,5,7
  CHECK_FALSE(is_prime_u64(2305843009213693953ULL));
}

TEST_CASE("scalar examples") {
  const PrimeField f7(7), f101(101);
  CHECK(f7.inv(Fe(3)) == Fe(5));
  CHECK(f101.pow(Fe(2), 10) == Fe(14));
  Rng rng(3);
  for (int i = 0; i < 50; ++i) CHECK(f101.mul(Fe(0), rng.uniform(f101)) == Fe(0));
  CHECK_ERRC(f7.inv(Fe(0)), Errc::DivisionByZero);
  CHECK(f7.elem_signed(-1) == Fe(6));
  CHECK(f7.elem(20) == Fe(6));
}

TEST_CASE("batch inversion") {
  const PrimeField f7(7);
  CHECK(batch_inv(f7, ints(f7, {1, 2, 4})) == ints(f7, {1, 4, 2}));
  CHECK(batch_inv(f7, ints(f7, {1})) == ints(f7, {1}));
  CHECK_ERRC(batch_inv(f7, ints(f7, {1, 0, 3})), Errc::DivisionByZero);

  const PrimeField f;
  Rng rng(11);
  Vec v(100);
  for (auto& x : v) x = rng.nonzero(f);
  OpCount ops;
  const Vec inv = batch_inv(f, v, &ops);
  for (std::size_t i = 0; i < v.size(); ++i) CHECK(inv[i] == fermat_inv(f, v[i]));
  CHECK(ops.mults == 3 * 99);
}

TEST_CASE("ring axioms on random samples") {
  for (std::uint64_t p : {7ULL, 101ULL, 2013265921ULL, 4611686018427387847ULL}) {
    const PrimeField f(p);
    Rng rng(p);
    for (int i = 0; i < 1000; ++i) {
      const Fe a = rng.uniform(f), b = rng.uniform(f), c = rng.uniform(f);
      CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
      CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
      CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
      CHECK(f.mul(a, b) == f.mul(b, a));
      CHECK(f.add(a, f.neg(a)) == f.zero());
      CHECK(f.sub(a, b) == f.add(a, f.neg(b)));
      CHECK(f.mul(a, b).v < p);
      CHECK(f.add(a, b).v < p);
      if (a != f.zero()) CHECK(f.mul(a, f.inv(a)) == f.one());
    }
  }
}

TEST_CASE("multiplication matches 128-bit reference") {
  for (std::uint64_t p : {2013265921ULL, 4611686018427387847ULL}) {
    const PrimeField f(p);
    Rng rng(p + 1);
    for (int i = 0; i < 1000; ++i) {
      const Fe a = rng.uniform(f), b = rng.uniform(f);
      const auto ref = static_cast<std::uint64_t>(static_cast<detail::u128>(a.v) * b.v % p);
      CHECK(f.mul(a, b).v == ref);
    }
  }
}

TEST_CASE("rng and seed derivation are deterministic") {
  Rng a(42), b(42), c(43);
  bool differs = false;
  for (int i = 0; i < 10; ++i) {
    const auto x = a.next();
    CHECK(x == b.next());
    differs |= x != c.next();
  }
  CHECK(differs);
  CHECK(derive_seed(1, 2) == derive_seed(1, 2));
  CHECK(derive_seed(1, 2) != derive_seed(1, 3));
  const PrimeField f(101);
  Rng r(5);
  for (int i = 0; i < 200; ++i) {
    CHECK(r.uniform(f).v < 101);
    CHECK(r.nonzero(f).v != 0);
  }
}

}  // TEST_SUITE
