#pragma once

#include <cstdint>

#include "core/instances.hpp"

namespace incdec {

// Deterministic PRNG with a fixed cross-platform stream (splitmix64).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  std::uint64_t below(std::uint64_t bound);  // uniform-ish in [0, bound)

 private:
  std::uint64_t state_;
};

// All generated functions are monotone with small rational values
// (denominators 1 or 2), so exhaustive analysis stays cheap and exact.
SetFunctionSpec random_monotone_table(Rng& rng, int n);
SetFunctionSpec random_modular(Rng& rng, int n);
SetFunctionSpec random_coverage(Rng& rng, int n, int max_universe);
// Pairwise bonuses make marginals grow with the base set.
SetFunctionSpec random_supermodular_table(Rng& rng, int n);

Instance random_coverage_pair(std::uint64_t seed, int n, int max_universe);
// Mixed table/modular/coverage pair with n drawn from [2, max_n].
Instance random_monotone_pair(std::uint64_t seed, int max_n);
// Coverage pair with g rescaled so that g(E) = h(E) > 0.
Instance random_equal_totals_pair(std::uint64_t seed, int n, int max_universe);

}  // namespace incdec
