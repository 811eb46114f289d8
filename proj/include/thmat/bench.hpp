#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "thmat/field.hpp"

namespace thmat::bench {

enum class Algorithm { MinpolyNaive, MinpolyBsgs, CharpolyBlock, DenseCharpoly, DenseMinpoly };

const char* label(Algorithm a) noexcept;
std::optional<Algorithm> parse_algorithm(std::string_view s) noexcept;

struct BenchRecord {
  std::size_t n = 0;
  std::size_t alpha_t = 0;
  std::size_t alpha_h = 0;
  std::size_t beta = 1;
  Algorithm algorithm = Algorithm::MinpolyBsgs;
  std::uint64_t field_mults = 0;
  std::uint64_t wall_ns = 0;
  std::uint64_t seed = 0;
};

struct BenchConfig {
  std::vector<std::size_t> sizes;
  std::size_t alpha_t = 2;
  std::size_t alpha_h = 0;
  std::size_t beta = 1;
  std::vector<Algorithm> algorithms;
  std::vector<std::uint64_t> seeds{1};
  std::uint64_t modulus = PrimeField::kDefaultModulus;
};

inline constexpr std::size_t kMaxStructuredBenchDim = 1 << 14;

// Throws InvalidArgument on an empty or out-of-range grid. Instances are
// random_structured(n, alpha_t, alpha_h, field, seed); dense algorithms run
// on their reconstruction. Rows come out in (n, seed, algorithm) order.
std::vector<BenchRecord> run_bench(const BenchConfig& cfg);

inline constexpr std::string_view kCsvHeader = "n,alphaT,alphaH,beta,algorithm,field_mults,wall_ns,seed";
std::string to_csv(std::span<const BenchRecord> rows);

}  // namespace thmat::bench
