#pragma once

#include <cstdint>
#include <random>

#include "thmat/field.hpp"

namespace thmat {

constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Derive an independent stream seed from a parent seed and a label.
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t label) noexcept {
  return splitmix64(seed ^ splitmix64(label + 0x632be59bd9b4e019ULL));
}

// Seeded generator with platform-independent output: only the raw
// mt19937_64 stream is used, never the std distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}

  std::uint64_t next() { return engine_(); }

  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % bound;
  }

  Fe uniform(const PrimeField& f) { return Fe(below(f.modulus())); }
  Fe nonzero(const PrimeField& f) { return Fe(1 + below(f.modulus() - 1)); }

  Vec vector(const PrimeField& f, std::size_t n) {
    Vec v(n);
    for (auto& x : v) x = uniform(f);
    return v;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace thmat
