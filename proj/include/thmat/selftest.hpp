#pragma once

#include <cstdint>
#include <ostream>

#include "thmat/field.hpp"

namespace thmat {

// Reduced-size invariant suite. Prints one PASS/FAIL/SKIP line per check
// and a summary; output is deterministic. Returns true iff nothing failed.
bool run_selftest(std::ostream& out, std::uint64_t modulus = PrimeField::kDefaultModulus);

}  // namespace thmat
