#include "cantor.hpp"

#include <map>

namespace towerkit::cantor {

namespace {

BigInt pow2(uint64_t k) {
  return BigInt(1) << static_cast<unsigned>(k);
}

}  // namespace

std::string GoodInterval::str() const {
  return "good(" + std::to_string(n) + "," + i.str() + ")";
}

GoodInterval GoodInterval::parse(const std::string& s) {
  if (s.rfind("good(", 0) != 0 || s.back() != ')')
    throw std::invalid_argument("GoodInterval: cannot parse '" + s + "'");
  auto comma = s.find(',');
  if (comma == std::string::npos)
    throw std::invalid_argument("GoodInterval: cannot parse '" + s + "'");
  try {
    uint64_t n = std::stoull(s.substr(5, comma - 5));
    BigInt i(s.substr(comma + 1, s.size() - comma - 2));
    return GoodInterval{n, std::move(i)};
  } catch (const std::exception&) {
    throw std::invalid_argument("GoodInterval: cannot parse '" + s + "'");
  }
}

Interval good_interval(const GoodInterval& g) {
  if (g.n >= 100000) throw std::invalid_argument("good_interval: level too deep");
  if (g.i < 0 || g.i >= (BigInt(1) << static_cast<unsigned>(g.n)))
    throw std::out_of_range("good_interval: index out of range");
  BigInt d = pow2(g.n + 1);
  return Interval::closed(Rational(2 * g.i + 1, d), Rational(2 * g.i + 2, d));
}

std::vector<GoodInterval> cylinder_image(uint64_t n) {
  if (n >= 30) throw std::invalid_argument("cylinder_image: level too deep to enumerate");
  std::vector<GoodInterval> out;
  out.reserve(1ull << n);
  for (uint64_t i = 0; i < (1ull << n); ++i) out.push_back(GoodInterval{n, BigInt(i)});
  return out;
}

Rational lambda_value(const UPSet& y) {
  const Bits& prefix = y.prefix();
  const Bits& period = y.period();
  BigInt p_val = 0;
  for (bool b : prefix) p_val = (p_val << 1) + (b ? 1 : 0);
  BigInt n_val = 0;
  for (bool b : period) n_val = (n_val << 1) + (b ? 1 : 0);
  BigInt tail_den = pow2(period.size()) - 1;
  // sum_{n<p} prefix[n] 2^-(n+1)  +  2^-p * N / (2^q - 1)
  return Rational(p_val * tail_den + n_val, pow2(prefix.size()) * tail_den);
}

std::optional<BigInt> locate(const Rational& x, uint64_t n) {
  if (x <= Rational(0) || x >= Rational(1))
    throw std::domain_error("locate: x must lie in (0,1)");
  if (as_dyadic(x)) throw std::domain_error("locate: dyadic x is ambiguous");
  BigInt t = floor_mul_pow2(x, static_cast<unsigned>(n + 1));
  if ((t & 1) == 0) return std::nullopt;
  return (t - 1) / 2;
}

GoodInterval find_good_within(const Interval& iv, uint64_t n) {
  if (!iv.is_open()) throw std::invalid_argument("find_good_within: interval must be open");
  if (iv.lo() < Rational(0) || iv.hi() > Rational(1))
    throw std::invalid_argument("find_good_within: interval must lie in (0,1)");
  Rational eps = iv.length();
  Rational bound = Rational(BigInt(3), pow2(n + 1));
  if (!(bound < eps))
    throw std::invalid_argument("find_good_within: need 3/2^" + std::to_string(n + 1) + " = " +
                                bound.str() + " < length = " + eps.str());

  // Cover [0,1] by the 2^(n+1) grid pieces; the interior run has length
  // at least two, so one of its first two pieces starts at an odd index.
  BigInt i = floor_mul_pow2(iv.lo(), static_cast<unsigned>(n + 1));
  BigInt k = i + 1;
  if ((k & 1) == 0) k += 1;
  GoodInterval g{n, (k - 1) / 2};
  if (!interval_subset(good_interval(g), iv))
    throw std::logic_error("find_good_within: selection escaped the interval");
  return g;
}

std::vector<UPSet> preimage(const Rational& x) {
  if (x < Rational(0) || x > Rational(1)) throw std::domain_error("preimage: x outside [0,1]");
  if (x == Rational(0)) return {UPSet()};
  if (x == Rational(1)) return {UPSet::from_bits({}, {true})};

  BigInt b = x.den();
  BigInt r = x.num();
  Bits digits;
  std::map<BigInt, size_t> seen;
  while (true) {
    if (r == 0) {
      // terminating expansion; the sibling trades the final 1 for 0111...
      Bits alt(digits.begin(), digits.end() - 1);
      alt.push_back(false);
      return {UPSet::from_bits(digits, {false}), UPSet::from_bits(std::move(alt), {true})};
    }
    auto it = seen.find(r);
    if (it != seen.end()) {
      size_t start = it->second;
      Bits prefix(digits.begin(), digits.begin() + start);
      Bits period(digits.begin() + start, digits.end());
      return {UPSet::from_bits(std::move(prefix), std::move(period))};
    }
    seen.emplace(r, digits.size());
    r <<= 1;
    bool d = r >= b;
    if (d) r -= b;
    digits.push_back(d);
  }
}

Interval cylinder_hull(const Bits& w) {
  BigInt v = 0;
  for (bool b : w) v = (v << 1) + (b ? 1 : 0);
  BigInt d = pow2(w.size());
  return Interval::closed(Rational(v, d), Rational(v + 1, d));
}

Bits pick_cylinder(const Interval& u, uint64_t depth_cap,
                   const std::function<bool(uint64_t)>& penalized) {
  if (!u.is_open() || u.lo() < Rational(0) || u.hi() > Rational(1))
    throw std::invalid_argument("pick_cylinder: need an open interval inside (0,1)");

  bool have_best = false;
  uint64_t best_penalty = 0, best_depth = 0;
  BigInt best_j;

  for (uint64_t d = 1; d <= depth_cap; ++d) {
    BigInt j_left = floor_mul_pow2(u.lo(), static_cast<unsigned>(d)) + 1;
    for (int step = 0; step < 2; ++step) {
      BigInt j = j_left + step;
      // closed hull [j/2^d, (j+1)/2^d] strictly inside (lo, hi)
      if (!(Rational(j + 1, pow2(d)) < u.hi())) continue;
      uint64_t penalty = 0;
      BigInt t = j;
      for (uint64_t pos = d; pos-- > 0;) {
        if ((t & 1) != 0 && penalized(pos)) ++penalty;
        t >>= 1;
      }
      if (!have_best || penalty < best_penalty) {
        have_best = true;
        best_penalty = penalty;
        best_depth = d;
        best_j = j;
      }
    }
    if (have_best && best_penalty == 0) break;  // deeper candidates cannot beat penalty 0
  }
  if (!have_best)
    throw std::runtime_error("pick_cylinder: no cylinder of depth <= " +
                             std::to_string(depth_cap) + " fits inside " + u.str());

  Bits w(best_depth);
  BigInt t = best_j;
  for (uint64_t pos = best_depth; pos-- > 0;) {
    w[pos] = (t & 1) != 0;
    t >>= 1;
  }
  return w;
}

}  // namespace towerkit::cantor
