#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "fgd/rational.hpp"

namespace fgd {

// Seeded source for every randomized check. Bounded draws are derived from
// raw mt19937_64 output rather than std distributions, so a seed pins the
// whole sequence regardless of the standard library.
class Sampler {
public:
  explicit Sampler(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  // Uniform-ish draw from [0, n); n must be positive.
  int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }

  template <typename T>
  const T& pick(const std::vector<T>& pool) {
    return pool.at(static_cast<std::size_t>(below(static_cast<int>(pool.size()))));
  }

  // Strictly positive rational with numerator and denominator in [1, bound].
  Rational positive_rational(int bound = 9) {
    return Rational(1 + below(bound), 1 + below(bound));
  }

  // Possibly-zero small integer coefficient in [-bound, bound].
  Rational small_int(int bound = 4) { return Rational(below(2 * bound + 1) - bound); }

  GaussianRational small_gaussian(int bound = 4) { return {small_int(bound), small_int(bound)}; }

private:
  std::mt19937_64 eng_;
};

}  // namespace fgd
