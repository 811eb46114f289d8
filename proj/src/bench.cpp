#include "thmat/bench.hpp"

#include <chrono>
#include <sstream>

#include "thmat/annihilator.hpp"
#include "thmat/displacement.hpp"
#include "thmat/oracle.hpp"
#include "thmat/random.hpp"

namespace thmat::bench {

const char* label(Algorithm a) noexcept {
  switch (a) {
    case Algorithm::MinpolyNaive: return "minpoly-naive";
    case Algorithm::MinpolyBsgs: return "minpoly-bsgs";
    case Algorithm::CharpolyBlock: return "charpoly-block";
    case Algorithm::DenseCharpoly: return "dense-charpoly";
    case Algorithm::DenseMinpoly: return "dense-minpoly";
  }
  return "unknown";
}

std::optional<Algorithm> parse_algorithm(std::string_view s) noexcept {
  for (Algorithm a : {Algorithm::MinpolyNaive, Algorithm::MinpolyBsgs, Algorithm::CharpolyBlock,
                      Algorithm::DenseCharpoly, Algorithm::DenseMinpoly})
    if (s == label(a)) return a;
  return std::nullopt;
}

namespace {

bool is_dense(Algorithm a) { return a == Algorithm::DenseCharpoly || a == Algorithm::DenseMinpoly; }

std::uint64_t measure(const THMatrix& a, Algorithm algo, std::size_t beta, std::uint64_t seed) {
  switch (algo) {
    case Algorithm::MinpolyNaive: return minpoly(a, seed, SequenceMode::Naive).field_mult_count;
    case Algorithm::MinpolyBsgs: return minpoly(a, seed, SequenceMode::Bsgs).field_mult_count;
    case Algorithm::CharpolyBlock: return charpoly_generic(a, beta, seed).field_mult_count;
    case Algorithm::DenseCharpoly: {
      OpCount ops;
      oracle::dense_charpoly(reconstruct(a), &ops);
      return ops.mults;
    }
    case Algorithm::DenseMinpoly: {
      OpCount ops;
      oracle::dense_minpoly(reconstruct(a), &ops);
      return ops.mults;
    }
  }
  return 0;
}

}  // namespace

std::vector<BenchRecord> run_bench(const BenchConfig& cfg) {
  if (cfg.sizes.empty() || cfg.algorithms.empty() || cfg.seeds.empty())
    throw Error(Errc::InvalidArgument, "empty benchmark grid");
  for (std::size_t n : cfg.sizes) {
    if (n == 0 || n > kMaxStructuredBenchDim)
      throw Error(Errc::InvalidArgument, "size " + std::to_string(n) + " outside the benchmark range");
    for (Algorithm a : cfg.algorithms)
      if (is_dense(a) && n > oracle::kMaxOracleDim)
        throw Error(Errc::InvalidArgument, std::string(label(a)) + " limited to n <= " +
                                               std::to_string(oracle::kMaxOracleDim));
    if (cfg.beta == 0 || cfg.beta > n) throw Error(Errc::BadBlockSize, "block size outside [1, n]");
  }
  const PrimeField f(cfg.modulus);
  std::vector<BenchRecord> rows;
  for (std::size_t n : cfg.sizes)
    for (std::uint64_t seed : cfg.seeds) {
      const THMatrix a = random_structured(n, cfg.alpha_t, cfg.alpha_h, f, seed);
      for (Algorithm algo : cfg.algorithms) {
        BenchRecord r{n, cfg.alpha_t, cfg.alpha_h, cfg.beta, algo, 0, 0, seed};
        const auto start = std::chrono::steady_clock::now();
        r.field_mults = measure(a, algo, cfg.beta, derive_seed(seed, n));
        const auto stop = std::chrono::steady_clock::now();
        r.wall_ns = static_cast<std::uint64_t>(
            std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count());
        rows.push_back(r);
      }
    }
  return rows;
}

std::string to_csv(std::span<const BenchRecord> rows) {
  std::ostringstream os;
  os << kCsvHeader << '\n';
  for (const auto& r : rows)
    os << r.n << ',' << r.alpha_t << ',' << r.alpha_h << ',' << r.beta << ',' << label(r.algorithm)
       << ',' << r.field_mults << ',' << r.wall_ns << ',' << r.seed << '\n';
  return os.str();
}

}  // namespace thmat::bench
