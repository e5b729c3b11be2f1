#pragma once

#include "interval.hpp"
#include "rational.hpp"
#include "upset.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace towerkit::cantor {

// Closed dyadic interval [(2i+1)/2^(n+1), (2i+2)/2^(n+1)], 0 <= i < 2^n.
// The index is unbounded: target levels deep enough to overflow machine
// words show up after a few iterated extensions.
struct GoodInterval {
  uint64_t n = 0;
  BigInt i = 0;

  friend bool operator==(const GoodInterval& a, const GoodInterval& b) {
    return a.n == b.n && a.i == b.i;
  }
  std::string str() const;  // "good(n,i)"
  static GoodInterval parse(const std::string& s);
};

Interval good_interval(const GoodInterval& g);

// All 2^n level-n good intervals in increasing order.
std::vector<GoodInterval> cylinder_image(uint64_t n);

// Exact value of sum_{n in y} 2^-(n+1): finite prefix sum plus the closed
// form of the periodic tail. Always lands in [0, 1].
Rational lambda_value(const UPSet& y);

// Index of the good-at-n interval containing x, if any. Rejects dyadic x
// (ambiguous boundary) and x outside (0, 1).
std::optional<BigInt> locate(const Rational& x, uint64_t n);

// Least-index good-at-n interval inside the open interval I, following the
// cover-by-2^(n+1)-pieces selection. Requires I inside (0,1) open and
// 3/2^(n+1) < length(I); reports the failing inequality otherwise.
GoodInterval find_good_within(const Interval& i, uint64_t n);

// Binary expansion(s) of x in [0, 1]: two eventually constant expansions for
// dyadic x in (0, 1) (terminating one first), otherwise the unique
// eventually periodic one.
std::vector<UPSet> preimage(const Rational& x);

// Dyadic cylinder chooser used by point minting. Returns the bits w of a
// cylinder whose closed value range [w000.., w111..] sits strictly inside
// the open interval U. Candidates are ranked by the number of 1-bits at
// penalized positions, then by depth, then leftmost. Throws when no cylinder
// of depth <= depth_cap fits.
Bits pick_cylinder(const Interval& u, uint64_t depth_cap,
                   const std::function<bool(uint64_t)>& penalized);

// Closed value range of a finite bit string's cylinder.
Interval cylinder_hull(const Bits& w);

}  // namespace towerkit::cantor
