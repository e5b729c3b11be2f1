#include "sampler.hpp"

namespace towerkit {

Rational rand_rational01(Rng& rng, uint64_t max_den) {
  if (max_den < 2) throw std::invalid_argument("rand_rational01: max_den must be >= 2");
  uint64_t den = rng.range(2, max_den);
  uint64_t num = rng.range(1, den - 1);
  return Rational(BigInt(num), BigInt(den));
}

Interval rand_open_subinterval(Rng& rng, const Interval& outer, uint64_t max_den) {
  // scale two grid points into the outer interval
  for (int attempt = 0; attempt < 64; ++attempt) {
    Rational a = rand_rational01(rng, max_den);
    Rational b = rand_rational01(rng, max_den);
    if (a == b) continue;
    if (b < a) std::swap(a, b);
    Rational len = outer.length();
    Rational lo = outer.lo() + a * len;
    Rational hi = outer.lo() + b * len;
    return Interval::open(lo, hi);
  }
  throw std::logic_error("rand_open_subinterval: exhausted attempts");
}

Bits rand_bits(Rng& rng, uint64_t len) {
  Bits b(len);
  for (uint64_t i = 0; i < len; ++i) b[i] = rng.coin();
  return b;
}

UPSet rand_upset(Rng& rng, uint64_t max_prefix, uint64_t max_period) {
  uint64_t p = rng.below(max_prefix + 1);
  uint64_t q = rng.range(1, max_period);
  return UPSet::from_bits(rand_bits(rng, p), rand_bits(rng, q));
}

UPSet rand_infinite_coinfinite(Rng& rng, uint64_t max_prefix, uint64_t max_period) {
  uint64_t p = rng.below(max_prefix + 1);
  uint64_t q = rng.range(2, std::max<uint64_t>(2, max_period));
  Bits period = rand_bits(rng, q);
  uint64_t one_at = rng.below(q);
  uint64_t zero_at = (one_at + 1 + rng.below(q - 1)) % q;
  period[one_at] = true;
  period[zero_at] = false;
  return UPSet::from_bits(rand_bits(rng, p), std::move(period));
}

}  // namespace towerkit
