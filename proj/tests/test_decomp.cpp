#include "doctest.h"

#include "decomp.hpp"

using namespace towerkit;
using namespace towerkit::decomp;

namespace {
FiniteNwdSet fset(std::vector<long long> nums, long long den) {
  std::vector<Rational> pts;
  for (long long n : nums) pts.emplace_back(n, den);
  return FiniteNwdSet::of(std::move(pts));
}
}  // namespace

TEST_CASE("max intervals tile the complement") {
  auto f = FiniteNwdSet::of({Rational(1, 3), Rational(1, 2)});
  auto m = max_intervals(f);
  REQUIRE(m.size() == 3);
  CHECK(m[0] == Interval::open(Rational(0), Rational(1, 3)));
  CHECK(m[1] == Interval::open(Rational(1, 3), Rational(1, 2)));
  CHECK(m[2] == Interval::open(Rational(1, 2), Rational(1)));

  CHECK(max_intervals(FiniteNwdSet::of({Rational(1, 2)})).size() == 2);
  CHECK(max_intervals(fset({1, 2, 3}, 4)).size() == 4);

  // grid oracle: every off-set grid point lies in exactly one interval
  auto f2 = fset({1, 2, 3}, 4);
  auto m2 = max_intervals(f2);
  for (long long i = 1; i < 200; ++i) {
    Rational x(i, 200);
    bool in_f = std::any_of(f2.points.begin(), f2.points.end(),
                            [&](const Rational& p) { return p == x; });
    size_t hits = 0;
    for (const auto& iv : m2) hits += iv.contains(x) ? 1 : 0;
    CHECK(hits == (in_f ? 0u : 1u));
  }
}

TEST_CASE("finite nwd set validation") {
  CHECK_THROWS(FiniteNwdSet::of({}));
  CHECK_THROWS(FiniteNwdSet::of({Rational(0)}));
  CHECK_THROWS(FiniteNwdSet::of({Rational(1, 2), Rational(1, 3)}));
}

TEST_CASE("induced interval isomorphism") {
  auto f = FiniteNwdSet::of({Rational(1, 3), Rational(1, 2)});
  auto g = FiniteNwdSet::of({Rational(1, 4), Rational(3, 4)});
  OrderMap phi{{Rational(1, 3), Rational(1, 4)}, {Rational(1, 2), Rational(3, 4)}};
  auto m = induced_iso(phi, f, g);
  REQUIRE(m.size() == 3);
  CHECK(m[0].second == Interval::open(Rational(0), Rational(1, 4)));
  CHECK(m[1].second == Interval::open(Rational(1, 4), Rational(3, 4)));
  CHECK(m[2].second == Interval::open(Rational(3, 4), Rational(1)));

  // identity map induces the identity
  OrderMap ident{{Rational(1, 3), Rational(1, 3)}, {Rational(1, 2), Rational(1, 2)}};
  auto mi = induced_iso(ident, f, f);
  for (const auto& [a, b] : mi) CHECK(a == b);

  auto small = FiniteNwdSet::of({Rational(1, 2)});
  CHECK_THROWS_AS(induced_iso(phi, f, small), std::invalid_argument);
}

TEST_CASE("assemble glues the pieces") {
  auto f = FiniteNwdSet::of({Rational(1, 3), Rational(1, 2)});
  auto g = FiniteNwdSet::of({Rational(1, 4), Rational(3, 4)});
  OrderMap phi{{Rational(1, 3), Rational(1, 4)}, {Rational(1, 2), Rational(3, 4)}};

  SUBCASE("empty pieces give back phi") {
    auto total = assemble(phi, f, g, {OrderMap{}, OrderMap{}, OrderMap{}});
    CHECK(total == phi);
    CHECK(check_order_iso(total));
  }

  SUBCASE("one populated piece") {
    OrderMap psi1{{Rational(2, 5), Rational(1, 2)}, {Rational(9, 20), Rational(2, 3)}};
    auto total = assemble(phi, f, g, {OrderMap{}, psi1, OrderMap{}});
    CHECK(total.size() == phi.size() + psi1.size());
    CHECK(check_order_iso(total));
    // extends phi pointwise
    for (const auto& pr : phi)
      CHECK(std::find(total.begin(), total.end(), pr) != total.end());
  }

  SUBCASE("range escape is rejected") {
    OrderMap bad{{Rational(2, 5), Rational(9, 10)}};  // image outside (1/4, 3/4)
    CHECK_THROWS_AS(assemble(phi, f, g, {OrderMap{}, bad, OrderMap{}}),
                    std::invalid_argument);
  }

  SUBCASE("domain escape is rejected") {
    OrderMap bad{{Rational(9, 10), Rational(1, 2)}};
    CHECK_THROWS_AS(assemble(phi, f, g, {OrderMap{}, bad, OrderMap{}}),
                    std::invalid_argument);
  }
}

TEST_CASE("order map text form") {
  OrderMap m{{Rational(1, 3), Rational(1, 4)}, {Rational(1, 2), Rational(3, 4)}};
  CHECK(order_map_str(m) == "[(1/3,1/4),(1/2,3/4)]");
  CHECK(order_map_str({}) == "[]");
}

TEST_CASE("order iso checker") {
  CHECK(check_order_iso({}));
  CHECK(check_order_iso({{Rational(1, 3), Rational(1, 4)}, {Rational(1, 2), Rational(3, 4)}}));
  CHECK_FALSE(
      check_order_iso({{Rational(1, 3), Rational(3, 4)}, {Rational(1, 2), Rational(1, 4)}}));
}
