#include "thmat/selftest.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "thmat/annihilator.hpp"
#include "thmat/displacement.hpp"
#include "thmat/error.hpp"
#include "thmat/oracle.hpp"
#include "thmat/poly.hpp"
#include "thmat/random.hpp"

namespace thmat {

namespace {

struct Check {
  std::string name;
  // Empty string on success, otherwise a short reason.
  std::function<std::string(const PrimeField&)> run;
  bool monte_carlo = false;
};

std::string ring_axioms(const PrimeField& f) {
  Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    const Fe a = rng.uniform(f), b = rng.uniform(f), c = rng.uniform(f);
    if (f.mul(f.mul(a, b), c) != f.mul(a, f.mul(b, c))) return "associativity";
    if (f.mul(a, f.add(b, c)) != f.add(f.mul(a, b), f.mul(a, c))) return "distributivity";
    if (a.v != 0 && f.mul(a, f.inv(a)) != f.one()) return "inverse";
  }
  return {};
}

std::string multiplication_paths(const PrimeField& f) {
  Rng rng(12);
  for (int i = 0; i < 10; ++i) {
    const Vec a = rng.vector(f, 1 + rng.below(200)), b = rng.vector(f, 1 + rng.below(200));
    const Vec ref = convolve(f, a, b, MulAlgo::Schoolbook);
    if (convolve(f, a, b, MulAlgo::Karatsuba) != ref) return "karatsuba";
    if (f.ntt_capable() && convolve(f, a, b, MulAlgo::Ntt) != ref) return "ntt";
  }
  return {};
}

std::string division(const PrimeField& f) {
  Rng rng(13);
  for (int i = 0; i < 20; ++i) {
    const Poly a(f, rng.vector(f, 12)), b(f, rng.vector(f, 1 + rng.below(6)));
    if (b.is_zero()) continue;
    const auto [q, r] = divrem(a, b);
    if (add(mul(q, b), r) != a || r.degree() >= b.degree()) return "a != q b + r";
  }
  return {};
}

std::string bm_minimality(const PrimeField&) {
  const PrimeField g5(5);
  Rng rng(14);
  for (int i = 0; i < 60; ++i) {
    const Vec s = rng.vector(g5, 1 + rng.below(8));
    const Poly bm = berlekamp_massey(g5, s);
    const auto ex = oracle::exhaustive_lfsr(g5, s, s.size());
    if (!ex || ex->degree() != bm.degree() || !annihilates_sequence(bm, s)) return "degree mismatch";
  }
  return {};
}

std::string displacement_identity(const PrimeField& f) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const THMatrix a = random_structured(4 + seed % 9, seed % 4, (seed / 4) % 4, f, seed);
    for (const auto* core : {&a.p(), &a.q()})
      if (oracle::stein_displacement(reconstruct(*core), OperatorTag::Down) != core->gen().product())
        return "displacement of reconstruction";
  }
  return {};
}

std::string homomorphism(const PrimeField& f) {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const std::size_t n = 5 + seed;
    const THMatrix a = random_structured(n, 1 + seed % 2, seed % 2, f, 100 + seed);
    const THMatrix b = random_structured(n, seed % 2, 1 + seed % 2, f, 200 + seed);
    const DenseMatrix da = reconstruct(a), db = reconstruct(b);
    if (reconstruct(add(a, b)) != add(da, db)) return "add";
    if (reconstruct(mul(a, b)) != mul(da, db)) return "mul";
    if (reconstruct(transpose(a)) != transpose(da)) return "transpose";
    if (reconstruct(power(a, 3)) != power(da, 3)) return "power";
  }
  return {};
}

std::string bsgs_equivalence(const PrimeField& f) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const std::size_t n = 6 + seed, beta = 1 + seed % 3;
    const THMatrix a = random_structured(n, 2, 1, f, 300 + seed);
    const Projectors pr = structured_projectors(n, beta, f, seed);
    const BsgsPlan plan{beta, 1 + seed % 4, 2 * n / beta + 2};
    if (bsgs_sequence(a, pr.u, pr.v, plan) != krylov_sequence_naive(a, pr.u, pr.v, plan.length))
      return "sequences differ";
  }
  return {};
}

std::string minpoly_oracle(const PrimeField& f) {
  int misses = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const THMatrix a = random_structured(10, 2, 1, f, 400 + seed);
    if (minpoly(a, seed).polynomial != oracle::dense_minpoly(reconstruct(a))) ++misses;
  }
  return misses <= 1 ? std::string{} : std::to_string(misses) + " mismatches";
}

std::string charpoly_oracle(const PrimeField& f) {
  int misses = 0;
  for (std::uint64_t seed = 0; seed < 9; ++seed) {
    const THMatrix a = random_structured(12, 2, 2, f, 500 + seed);
    const std::size_t beta = std::size_t{1} << (seed % 3);
    try {
      if (charpoly_generic(a, beta, seed).polynomial != oracle::dense_charpoly(reconstruct(a)))
        return "wrong characteristic polynomial";
    } catch (const NotGenericError&) {
      ++misses;
    }
  }
  return misses <= 1 ? std::string{} : std::to_string(misses) + " non-generic outcomes";
}

}  // namespace

bool run_selftest(std::ostream& out, std::uint64_t modulus) {
  std::optional<PrimeField> field;
  try {
    field.emplace(modulus);
  } catch (const Error& e) {
    out << "FAIL field: " << e.what() << "\nselftest: 0/1 passed\n";
    return false;
  }
  const std::vector<Check> checks = {
      {"field ring axioms", ring_axioms},
      {"multiplication paths agree", multiplication_paths},
      {"division identity", division},
      {"berlekamp-massey minimality", bm_minimality},
      {"displacement identity", displacement_identity},
      {"structured algebra homomorphism", homomorphism},
      {"bsgs sequence equals naive", bsgs_equivalence},
      {"minpoly matches dense oracle", minpoly_oracle, true},
      {"charpoly matches dense oracle", charpoly_oracle, true},
  };
  // Monte Carlo checks are meaningless when 4n/p is not small.
  const bool large_field = modulus > (1u << 20);
  std::size_t passed = 0, ran = 0;
  for (const auto& c : checks) {
    if (c.monte_carlo && !large_field) {
      out << "SKIP " << c.name << " (field too small)\n";
      continue;
    }
    ++ran;
    std::string why;
    try {
      why = c.run(*field);
    } catch (const std::exception& e) {
      why = e.what();
    }
    if (why.empty()) {
      ++passed;
      out << "PASS " << c.name << '\n';
    } else {
      out << "FAIL " << c.name << ": " << why << '\n';
    }
  }
  out << "selftest: " << passed << '/' << ran << " passed\n";
  return passed == ran;
}

}  // namespace thmat
