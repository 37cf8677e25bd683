#pragma once

#include <cstdint>

#include "ii/config.hpp"
#include "ii/dyadic.hpp"
#include "ii/rational.hpp"
#include "ii/scalar.hpp"

namespace ii {

// splitmix64. Trial i of a batch draws from child(seed, i), so results are
// identical whatever the thread count or schedule.
struct Rng {
  uint64_t state = 0;

  explicit Rng(uint64_t s = 0) : state(s) {}

  uint64_t u64() {
    state += 0x9E3779B97F4A7C15ull;
    uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // inclusive range
  long long range(long long lo, long long hi) {
    if (hi <= lo) return lo;
    return lo + static_cast<long long>(u64() % static_cast<uint64_t>(hi - lo + 1));
  }

  bool chance(int num, int den) { return range(1, den) <= num; }

  double unit() { return static_cast<double>(u64() >> 11) * 0x1.0p-53; }
};

inline Rng child_rng(uint64_t seed, uint64_t index) {
  Rng mixer(seed ^ (0xD1B54A32D192ED03ull * (index + 1)));
  mixer.u64();
  return Rng(mixer.u64());
}

// numerator in [-max_num, max_num], denominator in [1, max_den]
Rational random_rational(Rng& rng, int max_num = 16, int max_den = 16);

// Respects the ground-field mode: real mode keeps im = 0.
Scalar random_scalar(Rng& rng, int max_num = 16, int max_den = 16);

DyadicStep random_step(Rng& rng, int max_lvl, int max_num = 16, int max_den = 16);

// Nonzero step, for homogeneity/ratio style properties.
DyadicStep random_nonzero_step(Rng& rng, int max_lvl);

} // namespace ii
