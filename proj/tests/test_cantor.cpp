#include "doctest.h"

#include "cantor.hpp"

#include <algorithm>

using namespace towerkit;
using namespace towerkit::cantor;

namespace {
const UPSet evens = UPSet::parse("|10");

// Partial sums of the series bracket the exact value: an oracle independent
// of the closed-form tail.
void check_lambda_by_partial_sums(const UPSet& y) {
  Rational v = lambda_value(y);
  Rational partial(0);
  for (unsigned k = 0; k < 64; ++k) {
    if (y.member(k)) partial = partial + Rational(BigInt(1), BigInt(1) << (k + 1));
    CHECK(partial <= v);
    CHECK(v <= partial + Rational(BigInt(1), BigInt(1) << (k + 1)));
  }
}
}  // namespace

TEST_CASE("lambda of simple sets") {
  CHECK(lambda_value(UPSet::parse("1|0")) == Rational(1, 2));
  CHECK(lambda_value(evens) == Rational(2, 3));
  CHECK(lambda_value(UPSet::parse("|1")) == Rational(1));
  CHECK(lambda_value(UPSet()) == Rational(0));
  check_lambda_by_partial_sums(evens);
  check_lambda_by_partial_sums(UPSet::parse("1101|011"));
  check_lambda_by_partial_sums(UPSet::parse("0010|110"));
}

TEST_CASE("good interval endpoints") {
  CHECK(good_interval({1, 0}) == Interval::closed(Rational(1, 4), Rational(1, 2)));
  CHECK(good_interval({1, 1}) == Interval::closed(Rational(3, 4), Rational(1)));
  CHECK(good_interval({0, 0}) == Interval::closed(Rational(1, 2), Rational(1)));
  CHECK_THROWS_AS(good_interval({1, 2}), std::out_of_range);
}

TEST_CASE("cylinder image lists all good intervals") {
  auto lvl1 = cylinder_image(1);
  REQUIRE(lvl1.size() == 2);
  CHECK(good_interval(lvl1[0]) == Interval::closed(Rational(1, 4), Rational(1, 2)));
  CHECK(good_interval(lvl1[1]) == Interval::closed(Rational(3, 4), Rational(1)));
  CHECK(cylinder_image(0).size() == 1);
  auto lvl2 = cylinder_image(2);
  REQUIRE(lvl2.size() == 4);
  CHECK(good_interval(lvl2[0]) == Interval::closed(Rational(1, 8), Rational(1, 4)));
  CHECK(good_interval(lvl2[3]) == Interval::closed(Rational(7, 8), Rational(1)));
}

TEST_CASE("locate against direct scans") {
  // 2/3 = lambda(evens): in a good-at-n interval exactly for even n
  auto hit = locate(Rational(2, 3), 2);
  REQUIRE(hit.has_value());
  CHECK(*hit == 2);  // [5/8, 3/4]
  CHECK(interval_subset(Interval::closed(Rational(2, 3), Rational(2, 3)),
                        good_interval({2, *hit})));
  CHECK_FALSE(locate(Rational(2, 3), 1).has_value());
  CHECK_FALSE(locate(Rational(1, 3), 0).has_value());
  CHECK_THROWS_AS(locate(Rational(1, 2), 3), std::domain_error);
  CHECK_THROWS_AS(locate(Rational(3, 2), 0), std::domain_error);

  // scan oracle on a few non-dyadic points
  for (const auto& x : {Rational(1, 3), Rational(2, 7), Rational(5, 6), Rational(13, 21)}) {
    for (uint64_t n = 0; n <= 8; ++n) {
      std::optional<uint64_t> found;
      for (uint64_t i = 0; i < (1ull << n); ++i)
        if (good_interval({n, i}).contains(x)) found = i;
      CHECK(locate(x, n) == found);
    }
  }
}

TEST_CASE("locate matches membership through lambda") {
  for (const char* txt : {"|10", "1101|011", "001|101", "|110"}) {
    UPSet y = UPSet::parse(txt);
    Rational v = lambda_value(y);
    for (uint64_t n = 0; n <= 12; ++n) CHECK(locate(v, n).has_value() == y.member(n));
  }
}

TEST_CASE("find_good_within follows the covering argument") {
  auto g = find_good_within(Interval::open(Rational(1, 8), Rational(1, 2)), 3);
  CHECK(g == GoodInterval{3, 1});
  CHECK(good_interval(g) == Interval::closed(Rational(3, 16), Rational(1, 4)));

  auto g2 = find_good_within(Interval::open(Rational(1, 4), Rational(3, 4)), 2);
  CHECK(g2 == GoodInterval{2, 1});
  CHECK(good_interval(g2) == Interval::closed(Rational(3, 8), Rational(1, 2)));

  // 3/2 < 1 fails: no good-at-0 interval fits in (0,1)
  CHECK_THROWS_AS(find_good_within(Interval::open(Rational(0), Rational(1)), 0),
                  std::invalid_argument);
}

TEST_CASE("find_good_within returns the least index") {
  for (uint64_t n = 2; n <= 9; ++n) {
    Interval iv = Interval::open(Rational(1, 7), Rational(6, 7));
    if (!(Rational(BigInt(3), BigInt(1) << (unsigned)(n + 1)) < iv.length())) continue;
    auto g = find_good_within(iv, n);
    std::optional<uint64_t> least;
    for (uint64_t i = 0; i < (1ull << n); ++i) {
      if (interval_subset(good_interval({n, i}), iv)) {
        least = i;
        break;
      }
    }
    REQUIRE(least.has_value());
    CHECK(g.i == *least);
  }
}

TEST_CASE("preimage expansions") {
  auto two = preimage(Rational(1, 2));
  REQUIRE(two.size() == 2);
  CHECK(two[0] == UPSet::parse("1|0"));
  CHECK(two[1] == UPSet::parse("0|1"));

  auto evens_back = preimage(Rational(2, 3));
  REQUIRE(evens_back.size() == 1);
  CHECK(evens_back[0] == evens);

  auto zero = preimage(Rational(0));
  REQUIRE(zero.size() == 1);
  CHECK(zero[0] == UPSet());

  auto one = preimage(Rational(1));
  REQUIRE(one.size() == 1);
  CHECK(one[0] == UPSet::parse("|1"));

  CHECK_THROWS_AS(preimage(Rational(5, 4)), std::domain_error);

  for (const auto& x : {Rational(1, 3), Rational(3, 8), Rational(22, 7) / Rational(5)}) {
    for (const auto& y : preimage(x)) CHECK(lambda_value(y) == x);
  }
}

TEST_CASE("round trip through preimage") {
  for (const char* txt : {"|10", "110|010", "0|110", "10|0", "|01"}) {
    UPSet y = UPSet::parse(txt);
    auto back = preimage(lambda_value(y));
    CHECK(std::find(back.begin(), back.end(), y) != back.end());
  }
}

TEST_CASE("lambda is monotone on non-eventually-constant sequences") {
  // lexicographic order on sequences maps to value order
  UPSet a = UPSet::parse("01|10");
  UPSet b = UPSet::parse("10|10");
  CHECK(lambda_value(a) < lambda_value(b));
  CHECK(lambda_value(UPSet::parse("0|01")) < lambda_value(UPSet::parse("|10")));
}

TEST_CASE("good interval text form") {
  GoodInterval g{3, BigInt(5)};
  CHECK(g.str() == "good(3,5)");
  CHECK(GoodInterval::parse("good(3,5)") == g);
  CHECK(GoodInterval::parse("good(70,1180591620717411303423)").n == 70);
  CHECK_THROWS(GoodInterval::parse("good(3;5)"));
  CHECK_THROWS(GoodInterval::parse("interval(3,5)"));
}

TEST_CASE("cylinder hull and picker") {
  Bits w{false, true};  // cylinder 01
  CHECK(cylinder_hull(w) == Interval::closed(Rational(1, 4), Rational(1, 2)));

  auto no_penalty = [](uint64_t) { return false; };
  Bits pick = pick_cylinder(Interval::open(Rational(0), Rational(1)), 20, no_penalty);
  auto hull = cylinder_hull(pick);
  CHECK(hull.lo() > Rational(0));
  CHECK(hull.hi() < Rational(1));

  // narrow target
  Interval narrow = Interval::open(Rational(5, 16), Rational(6, 16));
  Bits w2 = pick_cylinder(narrow, 20, no_penalty);
  auto hull2 = cylinder_hull(w2);
  CHECK(hull2.lo() > narrow.lo());
  CHECK(hull2.hi() < narrow.hi());

  // penalties steer the pick away from flagged positions when possible
  Interval u = Interval::open(Rational(1, 100), Rational(1, 2));
  Bits w3 = pick_cylinder(u, 20, [](uint64_t p) { return p < 6; });
  uint64_t penalty = 0;
  for (size_t p = 0; p < w3.size() && p < 6; ++p) penalty += w3[p] ? 1 : 0;
  CHECK(penalty == 0);

  CHECK_THROWS(pick_cylinder(Interval::open(Rational(0), Rational(1, 1000000)), 5, no_penalty));
}
