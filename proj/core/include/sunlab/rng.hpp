#pragma once
// Deterministic seeded generator (splitmix64). Not std::: output must be
// identical across platforms and standard library versions.
#include <cstdint>

#include "sunlab/rational.hpp"

namespace sunlab {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound)
  std::uint64_t below(std::uint64_t bound) { return bound ? next() % bound : 0; }

  // Dyadic rational in [0, 1] with denominator 2^bits.
  Rational unit_fraction(int bits = 4) {
    long den = 1L << bits;
    return Rational(static_cast<long>(below(static_cast<std::uint64_t>(den) + 1)), den);
  }

  // Dyadic rational in [lo, hi].
  Rational between(const Rational& lo, const Rational& hi, int bits = 4) {
    return lo + unit_fraction(bits) * (hi - lo);
  }

 private:
  std::uint64_t state_;
};

}  // namespace sunlab
