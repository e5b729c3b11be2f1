#include "doctest.h"

#include "homeo.hpp"

using namespace towerkit;
using namespace towerkit::poset;
using namespace towerkit::homeo;

namespace {
Registry make_registry() {
  return Registry(UPSet::parse("|10"));
}

FixOk fix_or_fail(const HomeoCondition& p, uint64_t k, Registry& reg) {
  FixResult r = fix_bit_extend(p, k, reg);
  if (auto* err = std::get_if<std::string>(&r)) FAIL("fix_bit_extend failed: ", *err);
  return std::get<FixOk>(std::move(r));
}
}  // namespace

TEST_CASE("minimal condition validates") {
  Registry reg = make_registry();
  Coloring col{1};
  auto p = HomeoCondition::minimal();
  CHECK(validate(p, col, reg).ok);
  CHECK(extends(p, p));
}

TEST_CASE("validation catches each clause") {
  Registry reg = make_registry();
  Coloring col{2};

  size_t lvl1 = reg.tower().push_level({true});
  size_t lvl2 = reg.tower().push_level({false, true});
  size_t a1 = reg.point_for_level(lvl1);
  size_t a2 = reg.point_for_level(lvl2);

  auto base = HomeoCondition::minimal();
  auto q1 = add_point(base, a1, col, reg);
  CHECK(validate(q1, col, reg).ok);
  auto q2 = add_point(q1, a2, col, reg);
  CHECK(validate(q2, col, reg).ok);
  CHECK(extends(q2, q1));

  // repeated image: not injective
  HomeoCondition bad = q2;
  bad.f[1].second = bad.f[0].second;
  CHECK(validate(bad, col, reg).reason == "f is not injective");

  // wrong colour pairing
  HomeoCondition bad2 = q2;
  std::swap(bad2.f[0].second, bad2.f[1].second);
  auto v2 = validate(bad2, col, reg);
  CHECK_FALSE(v2.ok);

  // broken permutation
  HomeoCondition bad3 = q2;
  if (bad3.pi.size() >= 2) {
    bad3.pi[1] = bad3.pi[0];
    CHECK(validate(bad3, col, reg).reason == "pi is not a permutation");
  }

  CHECK_THROWS_AS(add_point(q2, a1, col, reg), std::invalid_argument);
}

TEST_CASE("separate gives distinct prefixes and extends") {
  Registry reg = make_registry();
  Coloring col{1};
  size_t lvl1 = reg.tower().push_level({true, true, false});
  size_t lvl2 = reg.tower().push_level({true, true, true});
  size_t a1 = reg.point_for_level(lvl1);
  size_t a2 = reg.point_for_level(lvl2);

  auto p = add_point(add_point(HomeoCondition::minimal(), a1, col, reg), a2, col, reg);
  auto sep = separate(p, reg);
  CHECK(extends(sep, p));
  CHECK(validate(sep, col, reg).ok);
  CHECK(sep.level >= 3);  // the two complements first differ at position 2
  CHECK(prefix_index(reg.a_set(a1).complement(), sep.level) !=
        prefix_index(reg.a_set(a2).complement(), sep.level));
  // already separated: unchanged
  auto sep2 = separate(sep, reg);
  CHECK(sep2.level == sep.level);
  CHECK(sep2.pi == sep.pi);

  auto empty_sep = separate(HomeoCondition::minimal(), reg);
  CHECK(empty_sep.level == 0);
}

TEST_CASE("fix_bit_extend on the minimal condition") {
  Registry reg = make_registry();
  auto ok = fix_or_fail(HomeoCondition::minimal(), 0, reg);
  CHECK(ok.cert.n == 0);
  CHECK(ok.q.level == 1);
  REQUIRE(ok.q.pi.size() == 2);
  CHECK(ok.q.pi[0] == 0);  // preserved final bit forces the identity
  CHECK(ok.q.pi[1] == 1);
  CHECK(extends(ok.q, HomeoCondition::minimal()));
  CHECK(check_fix_certificate(ok.q, 0).ok);
}

TEST_CASE("fix_bit_extend respects mapped points") {
  Registry reg = make_registry();
  Coloring col{1};
  size_t lvl = reg.tower().push_level({true, false, true});
  size_t a = reg.point_for_level(lvl);
  auto p = add_point(HomeoCondition::minimal(), a, col, reg);

  auto ok = fix_or_fail(p, 0, reg);
  CHECK(validate(ok.q, col, reg).ok);
  CHECK(extends(ok.q, p));
  CHECK(check_fix_certificate(ok.q, ok.cert.n).ok);
  // n avoids the mapped complement and image
  CHECK_FALSE(reg.a_set(a).complement().member(ok.cert.n));
  CHECK(reg.base().member(ok.cert.n));

  // iterate: strictly increasing witnessed bits
  auto ok2 = fix_or_fail(ok.q, ok.cert.n + 1, reg);
  CHECK(ok2.cert.n > ok.cert.n);
  CHECK(extends(ok2.q, ok.q));
  CHECK(check_fix_certificate(ok2.q, ok2.cert.n).ok);
  CHECK(check_fix_certificate(ok2.q, ok.cert.n).ok);  // earlier bit still fixed
}

TEST_CASE("fix certificate failures") {
  Registry reg = make_registry();
  auto ok = fix_or_fail(HomeoCondition::minimal(), 0, reg);
  CHECK_THROWS_AS(check_fix_certificate(ok.q, ok.q.level), std::invalid_argument);

  // tamper: swap across the bit-n classes
  HomeoCondition bad = ok.q;
  std::swap(bad.pi[0], bad.pi[1]);
  CHECK_FALSE(check_fix_certificate(bad, ok.cert.n).ok);

  FixResult r = fix_bit_extend(HomeoCondition::minimal(), 63, reg, 63);
  CHECK(std::holds_alternative<std::string>(r));
}

TEST_CASE("cylinder action oracle agrees") {
  Registry reg = make_registry();
  Coloring col{1};
  size_t lvl = reg.tower().push_level({true});
  auto p = add_point(HomeoCondition::minimal(), reg.point_for_level(lvl), col, reg);
  auto ok = fix_or_fail(p, 0, reg);

  for (uint64_t n = 0; n < ok.q.level && n <= 3; ++n) {
    bool preserved = true;
    for (uint32_t t = 0; t < ok.q.pi.size(); ++t) {
      uint64_t shift = ok.q.level - 1 - n;
      if (((t >> shift) & 1) != ((ok.q.pi[t] >> shift) & 1)) preserved = false;
    }
    CHECK(check_fix_certificate(ok.q, n).ok == preserved);
  }
}

TEST_CASE("first difference positions") {
  CHECK(first_difference(UPSet::parse("|10"), UPSet::parse("|01")) == 0);
  CHECK(first_difference(UPSet::parse("110|10"), UPSet::parse("|10")) == 1);
  CHECK_THROWS(first_difference(UPSet::parse("|10"), UPSet::parse("1|01")));
}
