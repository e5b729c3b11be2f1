#include "doctest.h"

#include "condition.hpp"

using namespace towerkit;
using namespace towerkit::poset;

namespace {
Registry make_registry() {
  return Registry(UPSet::parse("|10"));
}
}  // namespace

TEST_CASE("registry points are sound") {
  Registry reg = make_registry();
  size_t a0 = reg.point_for_level(0);
  CHECK(reg.a(a0).value == cantor::lambda_value(reg.base().complement()));
  CHECK(reg.point_for_level(0) == a0);  // idempotent

  size_t a1 = reg.mint_a_in(Interval::open(Rational(1, 4), Rational(1, 2)));
  CHECK(reg.a(a1).value > Rational(1, 4));
  CHECK(reg.a(a1).value < Rational(1, 2));
  CHECK_FALSE(as_dyadic(reg.a(a1).value).has_value());
  CHECK(reg.a_set(a1).almost_subset_bound(reg.base()).has_value());

  size_t b0 = reg.mint_b_in(Interval::open(Rational(1, 3), Rational(2, 3)));
  CHECK(reg.b(b0).value > Rational(1, 3));
  CHECK(reg.b(b0).value < Rational(2, 3));
  CHECK(reg.b(b0).set.almost_disjoint_bound(reg.base()).has_value());
  CHECK(reg.b(b0).set.cardinality_class() == CardClass::InfiniteCoinfinite);

  size_t b1 = reg.mint_b_in(Interval::open(Rational(1, 3), Rational(2, 3)));
  CHECK(reg.b(b0).set != reg.b(b1).set);
  CHECK(reg.b(b0).value != reg.b(b1).value);
}

TEST_CASE("b mint with prefix keeps the requested bits") {
  Registry reg = make_registry();
  Bits w{true};
  size_t b = reg.mint_b_prefix(w);
  CHECK(reg.b(b).set.member(0));
  // beyond the prefix the set avoids the base entirely
  auto bound = reg.b(b).set.almost_disjoint_bound(reg.base());
  REQUIRE(bound.has_value());
  CHECK(*bound <= w.size());
}

TEST_CASE("empty condition basics") {
  Registry reg = make_registry();
  RegistryView view(reg);
  Condition p;
  CHECK(p.is_partial_iso(view));
  Gap g = p.gap_of(view, Rational(1, 2));
  CHECK_FALSE(g.left.has_value());
  CHECK_FALSE(g.right.has_value());
  CHECK(g.image == Interval::open(Rational(0), Rational(1)));
  CHECK(p.restrict_to({}).empty());
}

TEST_CASE("dense mapping extends conditions") {
  Registry reg = make_registry();
  RegistryView view(reg);
  Condition p;

  size_t a = reg.mint_a_in(Interval::open(Rational(1, 4), Rational(1, 2)));
  auto [q, b] = Condition::dense_map_extend(p, a, Interval::open(Rational(0), Rational(1)), reg);
  CHECK(q.size() == 1);
  CHECK(q.extends(p));
  CHECK(q.is_partial_iso(view));
  CHECK(q.has_pair(a, b));

  // second point to the right, image constrained to the right gap
  size_t a2 = reg.mint_a_in(Interval::open(Rational(1, 2), Rational(3, 4)));
  Gap gap = q.gap_of(view, reg.a(a2).value);
  CHECK(gap.left.has_value());
  CHECK_FALSE(gap.right.has_value());
  auto [q2, b2] = Condition::dense_map_extend(q, a2, gap.image, reg);
  CHECK(q2.is_partial_iso(view));
  CHECK(q2.extends(q));
  CHECK(q2.extends(p));
  CHECK(reg.b(b2).value > reg.b(b).value);

  // restriction closure
  Condition r = q2.restrict_to({a2});
  CHECK(r.size() == 1);
  CHECK(r.is_partial_iso(view));
  CHECK(q2.extends(r));
  CHECK_THROWS_AS(q2.restrict_to({9999}), std::invalid_argument);

  // a target outside the gap is rejected
  size_t a3 = reg.mint_a_in(Interval::open(reg.a(a).value, Rational(1, 2)));
  CHECK_THROWS_AS(
      Condition::dense_map_extend(q2, a3, Interval::open(Rational(0), Rational(1)), reg),
      std::invalid_argument);

  // already-mapped point is rejected
  CHECK_THROWS_AS(Condition::dense_map_extend(q2, a, Interval::open(Rational(0), Rational(1)), reg),
                  std::invalid_argument);
}

TEST_CASE("order violations are detected") {
  Registry reg = make_registry();
  RegistryView view(reg);

  size_t a_lo = reg.mint_a_in(Interval::open(Rational(1, 8), Rational(1, 4)));
  size_t a_hi = reg.mint_a_in(Interval::open(Rational(1, 2), Rational(3, 4)));
  size_t b_lo = reg.mint_b_in(Interval::open(Rational(1, 8), Rational(1, 4)));
  size_t b_hi = reg.mint_b_in(Interval::open(Rational(1, 2), Rational(3, 4)));

  Condition crossing;
  crossing.insert_pair(view, a_lo, b_hi);
  crossing.insert_pair(view, a_hi, b_lo);
  CHECK_FALSE(crossing.is_partial_iso(view));

  Condition straight;
  straight.insert_pair(view, a_lo, b_lo);
  straight.insert_pair(view, a_hi, b_hi);
  CHECK(straight.is_partial_iso(view));

  Condition other;
  other.insert_pair(view, a_lo, b_hi);
  CHECK_FALSE(straight.extends(other));
  CHECK(straight.extends(straight));
}

TEST_CASE("gap_of rejects domain values") {
  Registry reg = make_registry();
  RegistryView view(reg);
  size_t a = reg.mint_a_in(Interval::open(Rational(1, 4), Rational(1, 2)));
  Condition p;
  auto [q, b] = Condition::dense_map_extend(p, a, Interval::open(Rational(0), Rational(1)), reg);
  CHECK_THROWS_AS(q.gap_of(view, reg.a(a).value), std::invalid_argument);

  size_t a2 = reg.mint_a_in(Interval::open(Rational(1, 2), Rational(2, 3)));
  Gap g = q.gap_of(view, reg.a(a2).value);
  CHECK(g.x0 == reg.a(a).value);
  CHECK(g.x1 == Rational(1));
  CHECK(g.image.lo() == reg.b(b).value);
  CHECK(g.image.hi() == Rational(1));
}
