#pragma once
#include <cstdint>
#include <vector>

#include "sunlab/l1_convexity.hpp"
#include "sunlab/rational.hpp"

namespace sunlab {

// Run-wide knobs. Defaults match the documented desk-scale setup; the CLI
// overrides from flags, with SUNLAB_SEED as the seed fallback.
struct Config {
  std::uint64_t seed = 1;
  Rational extent = Rational(4);
  std::vector<Rational> lambda_schedule = {Rational(2), Rational(4), Rational(8), Rational(16)};
  std::vector<Rational> densities = {Rational(1, 2), Rational(1, 4), Rational(1, 8)};
  long pair_budget = 200;
  long sweep_budget = 64;
  Rational oracle_resolution = Rational(1, 16);
  int jobs = 1;

  void validate() const;  // throws std::invalid_argument
  SearchBudget search_budget() const;
};

// Seed from the environment (SUNLAB_SEED) when the caller passed none.
std::uint64_t seed_or_env(const std::uint64_t* explicit_seed);

}  // namespace sunlab
