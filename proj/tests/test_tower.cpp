#include "doctest.h"

#include "tower.hpp"

using namespace towerkit;

namespace {
const UPSet evens = UPSet::parse("|10");

Bits bits_of(const std::string& s) {
  Bits b;
  for (char c : s) b.push_back(c == '1');
  return b;
}
}  // namespace

TEST_CASE("tower rejects degenerate base") {
  CHECK_THROWS_AS(Tower(UPSet::parse("|1")), std::invalid_argument);
  CHECK_THROWS_AS(Tower(UPSet::parse("101|0")), std::invalid_argument);
}

TEST_CASE("generated level realizes the complement prefix") {
  Tower t(evens);
  size_t lvl = t.push_level(bits_of("1"));
  CHECK(lvl == 1);
  // complement starts with 1, so 0 is not in the level
  CHECK_FALSE(t.level(1).member(0));
  CHECK(t.level(1).cardinality_class() == CardClass::InfiniteCoinfinite);
  CHECK(t.level(1).almost_subset_bound(t.level(0)).has_value());

  size_t lvl2 = t.push_level(bits_of("0000"));
  for (uint64_t n = 0; n < 4; ++n) CHECK(t.level(lvl2).member(n));
  CHECK(t.level(lvl2).almost_subset_bound(t.level(1)).has_value());
}

TEST_CASE("fresh thinning steps decrease strictly") {
  Tower t(evens);
  t.push_level(bits_of(""));
  t.push_level(bits_of(""));
  // strict: the higher level keeps infinitely much that the lower one drops
  UPSet dropped = set_difference(t.level(1), t.level(2));
  CHECK(dropped.cardinality_class() == CardClass::InfiniteCoinfinite);
  CHECK(t.level(2).almost_subset_bound(t.level(1)).has_value());
  CHECK_FALSE(t.level(1).almost_subset_bound(t.level(2)).has_value());
}

TEST_CASE("minting twice with the same prefix yields distinct levels") {
  Tower t(evens);
  size_t a = t.push_level(bits_of("01"));
  size_t b = t.push_level(bits_of("01"));
  CHECK(t.level(a) != t.level(b));
  // both complements have bits 0,1 at positions 0,1
  CHECK(t.level(a).member(0));
  CHECK_FALSE(t.level(a).member(1));
}

TEST_CASE("levels inside one batch stay below and distinct") {
  Tower t(evens);
  t.begin_batch();
  size_t a = t.mint_level(bits_of("0"));
  size_t b = t.mint_level(bits_of("0"));
  CHECK(t.level(a) != t.level(b));
  CHECK(t.level(b).almost_subset_bound(t.level(a)).has_value());
  CHECK(t.level(a).almost_subset_bound(t.level(0)).has_value());
}

TEST_CASE("window keeps small base elements") {
  Tower t(evens);
  t.push_level(bits_of("01"));
  // beyond the requested prefix and below the horizon, every base element
  // stays in the level (only non-base positions carry freshness bits)
  for (uint64_t n = 2; n < t.params().window_horizon; ++n)
    if (evens.member(n)) CHECK(t.level(1).member(n));
}

TEST_CASE("finite intersections with the base stay infinite") {
  Tower t(evens);
  t.push_level(bits_of("1"));
  t.push_level(bits_of("01"));
  t.push_level(bits_of("001"));
  UPSet meet = t.base();
  for (size_t i = 1; i < t.size(); ++i) meet = set_intersect(meet, t.level(i));
  CHECK(meet.is_infinite());
}

TEST_CASE("prefix beyond the depth cap is rejected") {
  Tower t(evens);
  Bits too_long(t.params().depth_cap + 1, false);
  CHECK_THROWS_AS(t.push_level(too_long), std::invalid_argument);
}
