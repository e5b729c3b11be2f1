#pragma once

#include "interval.hpp"
#include "rational.hpp"
#include "upset.hpp"

#include <cstdint>

namespace towerkit {

// Deterministic generator (splitmix64): identical streams on every platform
// for a given seed, so suite counterexamples replay exactly.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // uniform in [0, n)
  uint64_t below(uint64_t n) {
    if (n == 0) throw std::invalid_argument("Rng::below(0)");
    uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    uint64_t v;
    do {
      v = next();
    } while (v >= limit);
    return v % n;
  }

  // uniform in [lo, hi]
  uint64_t range(uint64_t lo, uint64_t hi) { return lo + below(hi - lo + 1); }

  bool coin() { return (next() & 1) != 0; }

 private:
  uint64_t state_;
};

// Rational strictly inside (0,1) with denominator at most max_den (>= 2).
Rational rand_rational01(Rng& rng, uint64_t max_den);

// Open interval with rational endpoints strictly inside the given open one.
Interval rand_open_subinterval(Rng& rng, const Interval& outer, uint64_t max_den);

Bits rand_bits(Rng& rng, uint64_t len);

// Arbitrary ultimately periodic set (canonicalized).
UPSet rand_upset(Rng& rng, uint64_t max_prefix, uint64_t max_period);

// Same, but guaranteed infinite and coinfinite.
UPSet rand_infinite_coinfinite(Rng& rng, uint64_t max_prefix, uint64_t max_period);

}  // namespace towerkit
