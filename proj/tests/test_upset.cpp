#include "doctest.h"

#include "upset.hpp"

using namespace towerkit;

namespace {
const UPSet evens = UPSet::parse("|10");
const UPSet odds = UPSet::parse("|01");
const UPSet full = UPSet::parse("|1");
const UPSet empty_set = UPSet::parse("|0");
}  // namespace

TEST_CASE("membership") {
  CHECK(evens.member(4));
  CHECK_FALSE(evens.member(5));
  CHECK(full.member(1000000000ull));
  UPSet s = UPSet::parse("101|10");
  CHECK(s.member(0));
  CHECK_FALSE(s.member(1));
  CHECK(s.member(2));
  CHECK(s.member(3));  // period starts: 1,0,...
  CHECK_FALSE(s.member(4));
}

TEST_CASE("canonical form is minimal") {
  CHECK(UPSet::from_bits({}, {true, false, true, false}) == evens);
  // prefix bits that agree with the rotated period are absorbed
  CHECK(UPSet::from_bits({true, false}, {true, false}) == evens);
  CHECK(UPSet::from_bits({true}, {false, true}) == evens);
  CHECK(UPSet::parse("1|01") == evens);
  CHECK(evens.str() == "|10");
  CHECK(UPSet::parse("0|1").str() == "0|1");  // {1,2,...}: not the full set
}

TEST_CASE("canonicalization is idempotent and respects denotation") {
  // {0,2,4} then odds from 7, entered with different prefix/period splits
  UPSet a = UPSet::from_bits({true, false, true, false, true, false},
                             {false, true, false, true});
  UPSet b = UPSet::from_bits({true, false, true, false, true, false, false, true, false, true},
                             {false, true, false, true});
  CHECK(a == b);
  CHECK(a.str() == "101010|01");
  uint64_t horizon = a.prefix_len() + 2 * a.period_len() + 8;
  for (uint64_t n = 0; n < horizon; ++n) CHECK(a.member(n) == b.member(n));
}

TEST_CASE("boolean operations") {
  CHECK(evens.complement() == odds);
  CHECK(set_intersect(evens, odds) == empty_set);
  CHECK(set_union(evens, evens.complement()) == full);
  // lcm alignment: multiples of 2 and of 3
  UPSet threes = UPSet::parse("|100");
  UPSet sixes = set_intersect(evens, threes);
  for (uint64_t n = 0; n < 40; ++n) CHECK(sixes.member(n) == (n % 6 == 0));
}

TEST_CASE("cardinality classes") {
  CHECK(evens.cardinality_class() == CardClass::InfiniteCoinfinite);
  CHECK(UPSet::parse("101|0").cardinality_class() == CardClass::Finite);
  CHECK(full.cardinality_class() == CardClass::Full);
  CHECK(empty_set.cardinality_class() == CardClass::Empty);
  CHECK(UPSet::parse("01|1").cardinality_class() == CardClass::Cofinite);
}

namespace {
// Brute-force oracle: least k with s \ k inside t, scanning memberships up
// to the alignment horizon.
std::optional<uint64_t> subset_bound_oracle(const UPSet& s, const UPSet& t) {
  uint64_t horizon =
      s.prefix_len() + t.prefix_len() + 2 * s.period_len() * t.period_len() + 4;
  for (uint64_t k = 0; k <= horizon; ++k) {
    bool ok = true;
    for (uint64_t n = k; n < horizon + k && ok; ++n)
      if (s.member(n) && !t.member(n)) ok = false;
    if (ok) return k;
  }
  return std::nullopt;
}
}  // namespace

TEST_CASE("almost subset bounds") {
  UPSet evens_minus = UPSet::parse("0000|10");  // evens without 0, 2
  CHECK(evens_minus.almost_subset_bound(evens) == 0);
  CHECK(evens.almost_subset_bound(evens_minus) == subset_bound_oracle(evens, evens_minus));
  CHECK(evens.almost_subset_bound(evens_minus) == 3);  // evens \ 3 = {4,6,...}
  CHECK_FALSE(evens.almost_subset_bound(odds).has_value());
  CHECK(evens.almost_subset_bound(evens) == 0);
}

TEST_CASE("almost disjoint bounds") {
  CHECK(evens.almost_disjoint_bound(odds) == 0);
  // {0,2} plus odds beyond 5
  UPSet t = UPSet::parse("101000|01");
  CHECK(evens.almost_disjoint_bound(t) == 3);
  CHECK_FALSE(evens.almost_disjoint_bound(evens).has_value());
}

TEST_CASE("min and max elements") {
  CHECK(evens.min_element() == 0);
  CHECK(odds.min_element() == 1);
  CHECK(evens.min_element_from(3) == 4);
  CHECK(UPSet::parse("101|0").max_element() == 2);
  CHECK_FALSE(empty_set.max_element().has_value());
  CHECK_THROWS(evens.max_element());
}

TEST_CASE("parse rejects junk") {
  CHECK_THROWS(UPSet::parse("10"));
  CHECK_THROWS(UPSet::parse("1|"));
  CHECK_THROWS(UPSet::parse("1|2"));
}
