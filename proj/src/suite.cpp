#include "suite.hpp"

#include "containment.hpp"
#include "decomp.hpp"
#include "homeo.hpp"
#include "pipeline.hpp"
#include "sampler.hpp"
#include "scenario.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

namespace towerkit {

namespace {

using containment::ForceOk;
using containment::ForceResult;
using poset::Condition;
using poset::Registry;
using poset::RegistryView;

struct TrialFail {
  std::string detail;
  std::string counterexample;
};

// Each battery body runs one trial and throws TrialFail on a counterexample.
using TrialFn = std::function<void(Rng&, uint64_t trial)>;

SuiteResult run_trials(const std::string& selector, uint64_t trials, uint64_t seed,
                       const TrialFn& fn) {
  SuiteResult res;
  res.selector = selector;
  res.trials = trials;
  Rng rng(seed ^ 0x74776b2d73756974ull);
  auto clock_ms = [] {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
  };
  uint64_t start = clock_ms();
  for (uint64_t t = 0; t < trials; ++t) {
    uint64_t t0 = clock_ms();
    try {
      fn(rng, t);
      res.max_trial_ms = std::max<uint64_t>(res.max_trial_ms, clock_ms() - t0);
    } catch (const TrialFail& f) {
      res.pass = false;
      res.detail = "trial " + std::to_string(t) + ": " + f.detail;
      std::ostringstream ce;
      ce << "{\"selector\":\"" << selector << "\",\"seed\":" << seed << ",\"trial\":" << t
         << ",\"data\":\"" << f.counterexample << "\"}";
      res.counterexample = ce.str();
      return res;
    } catch (const std::exception& e) {
      res.pass = false;
      res.detail = "trial " + std::to_string(t) + " raised: " + e.what();
      res.counterexample =
          "{\"selector\":\"" + selector + "\",\"seed\":" + std::to_string(seed) +
          ",\"trial\":" + std::to_string(t) + "}";
      return res;
    }
  }
  res.pass = true;
  res.total_ms = clock_ms() - start;
  res.detail = std::to_string(trials) + " trials";
  return res;
}

[[noreturn]] void trial_fail(const std::string& detail, const std::string& ce = "") {
  throw TrialFail{detail, ce};
}

void expect(bool cond, const std::string& what, const std::string& ce = "") {
  if (!cond) trial_fail(what, ce);
}

// ---------------------------------------------------------------- exactnum

void canonical_trial(Rng& rng, uint64_t) {
  int64_t p = static_cast<int64_t>(rng.below(20001)) - 10000;
  int64_t q = static_cast<int64_t>(rng.range(1, 10000)) * (rng.coin() ? 1 : -1);
  int64_t k = static_cast<int64_t>(rng.range(1, 50)) * (rng.coin() ? 1 : -1);
  Rational a{BigInt(p), BigInt(q)};
  Rational b{BigInt(k * p), BigInt(k * q)};
  expect(a == b, "scaled construction changed the value");
  expect(gcd(abs(a.num()), a.den()) == 1, "not in lowest terms");
  expect(a.den() > 0, "denominator not positive");
  expect(Rational::parse(a.str()) == a, "text round trip changed the value");
}

void partition_trial(Rng& rng, uint64_t) {
  Interval outer = rand_open_subinterval(rng, Interval::open(Rational(0), Rational(1)), 64);
  uint64_t j = rng.range(1, 12);
  auto parts = equal_partition(outer, j);
  expect(parts.size() == j, "wrong piece count");
  expect(parts.front().lo() == outer.lo() && parts.back().hi() == outer.hi(),
         "pieces do not tile the closure");
  for (size_t m = 0; m + 1 < parts.size(); ++m)
    expect(parts[m].hi() == parts[m + 1].lo(), "pieces leave a gap");
  for (const auto& p : parts)
    expect(p.length() == outer.length() / Rational(BigInt(j)), "pieces unequal");
  // union of pieces plus the j-1 interior cut points covers a sample of I
  for (int s = 0; s < 20; ++s) {
    Rational x = rand_open_subinterval(rng, outer, 97).lo();
    bool covered = false;
    for (const auto& p : parts)
      if (p.contains(x)) covered = true;
    for (size_t m = 0; m + 1 < parts.size() && !covered; ++m)
      if (parts[m].hi() == x) covered = true;
    expect(covered, "interior point escaped the partition");
  }
}

void subset_oracle_trial(Rng& rng, uint64_t) {
  auto rand_iv = [&] {
    Rational a = rand_rational01(rng, 40), b = rand_rational01(rng, 40);
    if (a == b) b = a + Rational(1, 41);
    if (b < a) std::swap(a, b);
    return Interval(a, b, rng.coin(), rng.coin());
  };
  Interval i = rand_iv(), j = rand_iv();
  bool claimed = interval_subset(i, j);
  // sample a dense grid of points of i and watch for escapes
  bool escape = false;
  Rational len = i.length();
  for (int s = 0; s <= 1000 && !escape; ++s) {
    Rational x = i.lo() + len * Rational(s, 1000);
    if (i.contains(x) && !j.contains(x)) escape = true;
  }
  if (claimed) {
    expect(!escape, "claimed subset but a sampled point escapes",
           i.str() + " vs " + j.str());
  } else if (!escape) {
    // the witness must sit near an endpoint: check both endpoints directly
    bool endpoint_escape =
        (i.contains(i.lo()) && !j.contains(i.lo())) ||
        (i.contains(i.hi()) && !j.contains(i.hi())) || i.lo() < j.lo() || i.hi() > j.hi();
    expect(endpoint_escape, "claimed non-subset without a witness",
           i.str() + " vs " + j.str());
  }
}

// ----------------------------------------------------------------- setalg

void upset_canonical_trial(Rng& rng, uint64_t) {
  UPSet s = rand_upset(rng, 8, 8);
  // re-split the same denotation and compare canonical forms
  uint64_t extra = rng.range(1, 6);
  Bits prefix, period;
  for (uint64_t n = 0; n < s.prefix_len() + extra; ++n) prefix.push_back(s.member(n));
  uint64_t reps = rng.range(1, 3);
  for (uint64_t r = 0; r < reps; ++r)
    for (uint64_t i = 0; i < s.period_len(); ++i)
      period.push_back(s.member(s.prefix_len() + extra + r * s.period_len() + i));
  UPSet t = UPSet::from_bits(std::move(prefix), std::move(period));
  expect(s == t, "equal denotations with different canonical forms", s.str() + " vs " + t.str());
  uint64_t horizon = s.prefix_len() + 2 * s.period_len() + 8;
  for (uint64_t n = 0; n < horizon; ++n)
    expect(s.member(n) == t.member(n), "membership disagrees after canonicalization");
}

void boolean_laws_trial(Rng& rng, uint64_t) {
  UPSet a = rand_upset(rng, 6, 6), b = rand_upset(rng, 6, 6), c = rand_upset(rng, 6, 6);
  expect(a.complement().complement() == a, "double complement");
  expect(set_intersect(a, b).complement() == set_union(a.complement(), b.complement()),
         "De Morgan (meet)");
  expect(set_union(a, b).complement() == set_intersect(a.complement(), b.complement()),
         "De Morgan (join)");
  expect(set_intersect(a, set_union(b, c)) ==
             set_union(set_intersect(a, b), set_intersect(a, c)),
         "distributivity");
  expect(set_difference(a, b) == set_intersect(a, b.complement()), "difference law");
}

void almost_subset_trial(Rng& rng, uint64_t) {
  // build S almost inside T by finite surgery on T's prefix
  UPSet t = rand_upset(rng, 6, 6);
  UPSet u = set_union(t, rand_upset(rng, 6, 6));
  Bits prefix;
  uint64_t cut = rng.below(8);
  for (uint64_t n = 0; n < cut; ++n) prefix.push_back(rng.coin());
  uint64_t keep = t.prefix_len() + t.period_len() + cut;
  for (uint64_t n = cut; n < keep; ++n) prefix.push_back(t.member(n) && rng.below(4) != 0);
  Bits period;
  for (uint64_t i = 0; i < t.period_len(); ++i) period.push_back(t.member(keep + i));
  UPSet s = UPSet::from_bits(std::move(prefix), std::move(period));

  auto b1 = s.almost_subset_bound(t);
  expect(b1.has_value(), "surgery broke almost containment", s.str() + " vs " + t.str());
  auto b2 = t.almost_subset_bound(u);
  expect(b2.has_value(), "union broke almost containment");
  auto b3 = s.almost_subset_bound(u);
  expect(b3.has_value(), "transitivity failed");
  expect(*b3 <= std::max(*b1, *b2), "composed bound exceeded the max of the parts");
  expect(s.almost_subset_bound(s) == 0, "reflexivity");
  // least bound: k-1 must still violate when k > 0
  if (*b1 > 0) expect(s.member(*b1 - 1) && !t.member(*b1 - 1), "bound not least");
}

void tower_battery_trial(Rng& rng, uint64_t) {
  UPSet x = rand_infinite_coinfinite(rng, 3, 5);
  Tower t(x);
  uint64_t levels = rng.range(1, 10);
  for (uint64_t i = 0; i < levels; ++i) {
    Bits w = rand_bits(rng, rng.below(5));
    for (auto&& bit : w)
      if (rng.below(4) != 0) bit = false;  // bias toward sparse complements
    t.push_level(w);
  }
  for (size_t i = 1; i < t.size(); ++i) {
    expect(t.level(i).cardinality_class() == CardClass::InfiniteCoinfinite,
           "level not infinite-coinfinite");
    expect(t.level(i).almost_subset_bound(t.level(i - 1)).has_value(),
           "level not almost inside the previous one");
    expect(!t.level(i - 1).almost_subset_bound(t.level(i)).has_value(),
           "adjacent levels do not strictly decrease");
  }
  // finite subfamilies meet the base in an infinite set
  UPSet meet = t.base();
  for (size_t i = 0; i < t.size(); ++i) {
    if (rng.coin()) meet = set_intersect(meet, t.level(i));
  }
  expect(meet.is_infinite(), "finite subfamily with finite intersection");
}

// ----------------------------------------------------------------- cantor

void roundtrip_trial(Rng& rng, uint64_t) {
  UPSet y = rand_upset(rng, 6, 6);
  auto back = cantor::preimage(cantor::lambda_value(y));
  expect(std::find(back.begin(), back.end(), y) != back.end(),
         "preimage lost the original set", y.str());
}

void duality_trial(Rng& rng, uint64_t) {
  UPSet y = rand_infinite_coinfinite(rng, 6, 6);
  Rational v = cantor::lambda_value(y);
  for (uint64_t n = 0; n <= 12; ++n)
    expect(cantor::locate(v, n).has_value() == y.member(n),
           "cylinder membership disagrees at level " + std::to_string(n), y.str());
}

void fact3_oracle_trial(Rng&, uint64_t trial) {
  uint64_t n = trial % 11;  // levels 0..10
  // brute force: hulls of all (n+1)-bit strings with final bit set, merged
  std::vector<Interval> merged;
  for (uint64_t s = 0; s < (1ull << (n + 1)); ++s) {
    if ((s & 1) == 0) continue;  // bit n clear
    BigInt den = BigInt(1) << (unsigned)(n + 1);
    Interval hull = Interval::closed(Rational(BigInt(s), den), Rational(BigInt(s + 1), den));
    if (!merged.empty() && merged.back().hi() == hull.lo())
      merged.back() = Interval::closed(merged.back().lo(), hull.hi());
    else
      merged.push_back(hull);
  }
  auto claimed = cantor::cylinder_image(n);
  expect(claimed.size() == merged.size(), "piece count differs from the enumeration");
  for (size_t i = 0; i < claimed.size(); ++i)
    expect(cantor::good_interval(claimed[i]) == merged[i],
           "piece " + std::to_string(i) + " differs at level " + std::to_string(n));
}

void prop25_trial(Rng& rng, uint64_t) {
  Interval iv = rand_open_subinterval(rng, Interval::open(Rational(0), Rational(1)), 512);
  uint64_t n = 0;
  while (!(Rational(BigInt(3), BigInt(1) << (unsigned)(n + 1)) < iv.length())) ++n;
  auto g = cantor::find_good_within(iv, n);
  expect(interval_subset(cantor::good_interval(g), iv), "selection not inside the interval",
         iv.str());
  // exhaustive scan: the returned index is the least fitting one
  std::optional<uint64_t> least;
  for (uint64_t i = 0; i < (1ull << n); ++i) {
    if (interval_subset(cantor::good_interval({n, i}), iv)) {
      least = i;
      break;
    }
  }
  expect(least.has_value(), "enumeration found no fitting interval despite the bound", iv.str());
  expect(g.i == *least, "selection is not the least index", iv.str());
}

void monotone_trial(Rng& rng, uint64_t) {
  UPSet a = rand_infinite_coinfinite(rng, 6, 6);
  UPSet b = rand_infinite_coinfinite(rng, 6, 6);
  if (a == b) return;
  uint64_t d = homeo::first_difference(a, b);
  bool a_less = !a.member(d);  // lexicographic comparison at the first difference
  expect((cantor::lambda_value(a) < cantor::lambda_value(b)) == a_less,
         "lambda does not respect the lexicographic order", a.str() + " vs " + b.str());
}

// ------------------------------------------------------------------ poset

Registry random_registry(Rng& rng, uint64_t levels = 3) {
  UPSet x = rand_infinite_coinfinite(rng, 2, 4);
  Tower t(x);
  for (uint64_t i = 0; i < levels; ++i) {
    Bits w = rand_bits(rng, rng.below(4));
    for (auto&& bit : w)
      if (rng.below(4) != 0) bit = false;
    t.push_level(w);
  }
  return Registry(std::move(t));
}

Condition random_condition(Rng& rng, Registry& reg, uint64_t points) {
  Condition p;
  RegistryView view(reg);
  for (uint64_t i = 0; i < points; ++i) {
    size_t a = reg.mint_a_in(rand_open_subinterval(rng, Interval::open(Rational(0), Rational(1)),
                                                   64));
    if (p.dom_contains(a)) continue;
    poset::Gap gap = p.gap_of(view, reg.a(a).value);
    Interval u = rand_open_subinterval(rng, gap.image, 64);
    p.extend_in_place(a, u, reg);
  }
  return p;
}

void poset_axioms_trial(Rng& rng, uint64_t) {
  Registry reg = random_registry(rng);
  RegistryView view(reg);
  Condition p = random_condition(rng, reg, rng.range(1, 5));
  expect(p.is_partial_iso(view), "constructed condition is not an isomorphism");

  // restriction closure on a random domain subset
  std::vector<size_t> keep;
  for (const auto& pr : p.pairs())
    if (rng.coin()) keep.push_back(pr.a);
  Condition r = p.restrict_to(keep);
  expect(r.is_partial_iso(view), "restriction broke the isomorphism");
  expect(r.size() == keep.size(), "restriction lost pairs");
  expect(p.extends(r), "condition does not extend its restriction");

  // dense mapping: fresh point into a random open target inside its gap
  size_t a = reg.mint_a_in(rand_open_subinterval(rng, Interval::open(Rational(0), Rational(1)),
                                                 64));
  if (p.dom_contains(a)) return;
  poset::Gap gap = p.gap_of(view, reg.a(a).value);
  Interval u = rand_open_subinterval(rng, gap.image, 64);
  auto [q, b] = Condition::dense_map_extend(p, a, u, reg);
  expect(q.is_partial_iso(view), "dense mapping broke the isomorphism");
  expect(q.extends(p), "dense mapping lost the original condition");
  expect(u.contains(reg.b(b).value), "image escaped the requested target");
  expect(q.size() == p.size() + 1, "dense mapping added more than one point");
}

void poset_schedule_trial(Rng& rng, uint64_t) {
  Scenario sc;
  sc.name = "battery";
  UPSet x = rand_infinite_coinfinite(rng, 2, 4);
  sc.x_text = x.str();
  uint64_t levels = rng.range(1, 4);
  for (uint64_t i = 0; i < levels; ++i) {
    Bits w = rand_bits(rng, rng.below(4));
    std::string ws;
    for (bool bit : w) ws += (bit && rng.below(4) == 0) ? '1' : '0';
    sc.tower_prefixes.push_back(ws);
  }
  for (uint64_t i = 0; i < rng.range(1, 3); ++i)
    sc.b_points.push_back(BPointSpec{rng.coin() ? "1" : "0", 0});
  uint64_t tasks = rng.range(1, 5);
  for (uint64_t i = 0; i < tasks; ++i) {
    switch (rng.below(3)) {
      case 0: sc.schedule.push_back(Task{TaskKind::AddDomain, rng.below(levels + 1)}); break;
      case 1: sc.schedule.push_back(Task{TaskKind::AddRange, rng.below(sc.b_points.size())}); break;
      default: sc.schedule.push_back(Task{TaskKind::MeetContainment, rng.below(4)}); break;
    }
  }
  RunOutcome out = run_scenario(sc);
  expect(out.pass, "schedule run failed its checks");
  for (const auto& c : out.checks)
    expect(c.pass, "check failed: " + c.name + " " + c.detail);
}

// ------------------------------------------------------------ containment

struct DensityScenario {
  Registry reg;
  Condition p;
  uint64_t k;
};

DensityScenario random_density_scenario(Rng& rng) {
  // dense bases and short sparse prefixes keep clear levels low: a trial's
  // cost is 2^(n+1) mints; a small thinning modulus keeps each mint cheap
  UPSet x = rand_infinite_coinfinite(rng, 1, 3);
  TowerParams params;
  params.mint_modulus = 128;
  Tower t(x, params);
  uint64_t levels = rng.range(1, 15);
  for (uint64_t i = 0; i < levels; ++i) {
    Bits w = rand_bits(rng, rng.below(5));
    for (auto&& bit : w)
      if (rng.below(4) != 0) bit = false;
    t.push_level(w);
  }
  Registry reg(std::move(t));
  reg.set_protect_limit(8 + 8);
  RegistryView view(reg);
  Condition p;
  uint64_t dom = rng.below(7);
  for (uint64_t i = 0; i < dom; ++i) {
    size_t lvl = rng.below(reg.tower().size());
    size_t a = reg.point_for_level(lvl);
    if (p.dom_contains(a)) continue;
    poset::Gap gap = p.gap_of(view, reg.a(a).value);
    p.extend_in_place(a, gap.image, reg);
  }
  return DensityScenario{std::move(reg), std::move(p), rng.below(9)};
}

void density_trial(Rng& rng, uint64_t) {
  DensityScenario d = random_density_scenario(rng);

  // the geometric clear-level test must agree with the combinatorial one:
  // no domain value in a good-at-n interval iff n lies in every domain level
  UPSet meet = d.reg.base();
  for (const auto& pr : d.p.pairs()) meet = set_intersect(meet, d.reg.a_set(pr.a));
  for (uint64_t n = 0; n <= 16; ++n) {
    if (!d.reg.base().member(n)) continue;
    bool geometric = true;
    for (const auto& pr : d.p.pairs())
      if (cantor::locate(d.reg.a(pr.a).value, n).has_value()) geometric = false;
    expect(geometric == meet.member(n),
           "clear-level tests disagree at " + std::to_string(n));
  }

  ForceResult r = containment::force_containment(d.p, d.k, d.reg, {64, 60});
  if (auto* err = std::get_if<std::string>(&r)) trial_fail("force_containment failed: " + *err);
  ForceOk ok = std::get<ForceOk>(std::move(r));
  expect(ok.q.extends(d.p), "result does not extend the input");
  RegistryView view(d.reg);
  auto chk = containment::check_certificate(ok.q, ok.cert, view, d.reg.base());
  expect(chk.ok, "certificate rejected: " + chk.reason);
  expect(ok.cert.n >= d.k && d.reg.base().member(ok.cert.n), "witnessed level outside X \\ k");
}

void soundness_trial(Rng& rng, uint64_t) {
  // small clear levels only: exhaustive image-bound check per entry
  DensityScenario d = random_density_scenario(rng);
  ForceResult r = containment::force_containment(d.p, 0, d.reg, {64, 60});
  if (auto* err = std::get_if<std::string>(&r)) trial_fail("force_containment failed: " + *err);
  ForceOk ok = std::get<ForceOk>(std::move(r));
  if (ok.cert.n > 3) return;  // oracle is exhaustive; keep it small
  RegistryView view(d.reg);

  for (const auto& e : ok.cert.entries) {
    Interval t = cantor::good_interval({ok.cert.n, e.t_index});
    Interval s = cantor::good_interval({ok.cert.l, e.s_index});
    // image bounds straight from q's pairs, ignoring the certificate ids
    Rational lo(0), hi(1);
    for (const auto& pr : ok.q.pairs()) {
      Rational av = d.reg.a(pr.a).value;
      if (av < t.lo()) lo = d.reg.b(pr.b).value;
      if (av > t.hi() && hi == Rational(1)) hi = d.reg.b(pr.b).value;
    }
    expect(s.lo() <= lo && hi <= s.hi(),
           "endpoint oracle places the image outside the target");
  }
}

void growth_trial(Rng& rng, uint64_t) {
  DensityScenario d = random_density_scenario(rng);
  Condition q = d.p;
  uint64_t prev = 0;
  bool first = true;
  for (int step = 0; step < 3; ++step) {
    uint64_t k = first ? 0 : prev + 1;
    ForceResult r = containment::force_containment(q, k, d.reg, {64, 60});
    if (auto* err = std::get_if<std::string>(&r)) trial_fail("iteration failed: " + *err);
    ForceOk ok = std::get<ForceOk>(std::move(r));
    expect(first || ok.cert.n > prev, "witnessed level did not grow");
    expect(d.reg.base().member(ok.cert.n), "witnessed level left X");
    prev = ok.cert.n;
    first = false;
    q = std::move(ok.q);
  }
}

void xinf_trial(Rng& rng, uint64_t) {
  DensityScenario d = random_density_scenario(rng);
  ForceResult r = containment::force_containment(d.p, d.k, d.reg, {64, 60});
  if (auto* err = std::get_if<std::string>(&r)) trial_fail("force_containment failed: " + *err);
  ForceOk ok = std::get<ForceOk>(std::move(r));
  containment::RegistryCombView comb(d.reg);
  auto xinf = containment::little_xinf(containment::induced_map(ok.q, comb), d.reg.base(), 256);
  expect(std::find(xinf.begin(), xinf.end(), ok.cert.n) != xinf.end(),
         "witnessed level missing from the pseudointersection scan");
  auto inv = containment::little_invariant_check({ok.cert.n}, ok.q, d.reg);
  expect(inv.pass, "dichotomy violated");
}

// ------------------------------------------------------------------ homeo

// Towers whose level complements carry pairwise distinct early markers, so
// condition separation stays far below the permutation-table cap.
Registry homeo_registry(Rng& rng, uint64_t levels) {
  UPSet x = rand_infinite_coinfinite(rng, 1, 3);
  Tower t(x);
  for (uint64_t i = 0; i < levels; ++i) {
    Bits w(i + 1, false);
    w.back() = true;
    t.push_level(w);
  }
  return Registry(std::move(t));
}

void homeo_order_trial(Rng& rng, uint64_t) {
  Registry reg = homeo_registry(rng, 4);
  homeo::Coloring col{static_cast<int>(rng.range(1, 3))};
  homeo::HomeoCondition a = homeo::HomeoCondition::minimal();
  auto b = homeo::add_point(a, reg.point_for_level(rng.range(1, reg.tower().size() - 1)), col,
                            reg);
  homeo::FixResult r = homeo::fix_bit_extend(b, rng.below(4), reg);
  if (auto* err = std::get_if<std::string>(&r)) trial_fail("fix failed: " + *err);
  auto c = std::get<homeo::FixOk>(std::move(r)).q;
  expect(homeo::extends(a, a) && homeo::extends(b, b) && homeo::extends(c, c), "reflexivity");
  expect(homeo::extends(b, a) && homeo::extends(c, b), "chain construction broke the order");
  expect(homeo::extends(c, a), "transitivity");
  expect(!homeo::extends(a, b), "antisymmetry violated");
}

void homeo_density_trial(Rng& rng, uint64_t) {
  Registry reg = homeo_registry(rng, rng.range(2, 6));
  homeo::Coloring col{static_cast<int>(rng.range(1, 3))};
  homeo::HomeoCondition p = homeo::HomeoCondition::minimal();
  uint64_t adds = rng.below(4);
  for (uint64_t i = 0; i < adds; ++i) {
    size_t lvl = rng.below(reg.tower().size());
    size_t a = reg.point_for_level(lvl);
    if (!p.dom_contains(a)) p = homeo::add_point(p, a, col, reg);
  }
  uint64_t k = rng.below(9);
  homeo::FixResult r = homeo::fix_bit_extend(p, k, reg);
  if (auto* err = std::get_if<std::string>(&r)) trial_fail("fix_bit_extend failed: " + *err);
  auto ok = std::get<homeo::FixOk>(std::move(r));
  expect(homeo::extends(ok.q, p), "extension lost the condition");
  expect(homeo::validate(ok.q, col, reg).ok, "extension invalid");
  expect(homeo::check_fix_certificate(ok.q, ok.cert.n).ok, "certificate rejected");
  expect(ok.cert.n >= k && reg.base().member(ok.cert.n), "fixed bit outside X \\ k");
}

void homeo_cylinder_trial(Rng& rng, uint64_t) {
  Registry reg = homeo_registry(rng, 2);
  homeo::Coloring col{1};
  homeo::HomeoCondition p = homeo::HomeoCondition::minimal();
  if (rng.coin()) p = homeo::add_point(p, reg.point_for_level(1), col, reg);
  homeo::FixResult r = homeo::fix_bit_extend(p, rng.below(3), reg);
  if (auto* err = std::get_if<std::string>(&r)) trial_fail("fix failed: " + *err);
  auto q = std::get<homeo::FixOk>(std::move(r)).q;
  if (q.level > 6) return;

  // brute force both the genuine table and a tampered one
  auto oracle = [&](const homeo::HomeoCondition& cond, uint64_t n) {
    for (uint32_t t = 0; t < cond.pi.size(); ++t) {
      uint64_t shift = cond.level - 1 - n;
      if (((t >> shift) & 1) != ((cond.pi[t] >> shift) & 1)) return false;
    }
    return true;
  };
  for (uint64_t n = 0; n < std::min<uint64_t>(q.level, 4); ++n)
    expect(homeo::check_fix_certificate(q, n).ok == oracle(q, n),
           "checker disagrees with the enumeration at bit " + std::to_string(n));
  homeo::HomeoCondition bad = q;
  uint32_t i = static_cast<uint32_t>(rng.below(bad.pi.size()));
  uint32_t j = static_cast<uint32_t>(rng.below(bad.pi.size()));
  std::swap(bad.pi[i], bad.pi[j]);
  for (uint64_t n = 0; n < std::min<uint64_t>(bad.level, 4); ++n)
    expect(homeo::check_fix_certificate(bad, n).ok == oracle(bad, n),
           "checker disagrees with the enumeration after tampering");
}

void homeo_dichotomy_trial(Rng& rng, uint64_t) {
  Registry reg = homeo_registry(rng, rng.range(2, 5));
  homeo::Coloring col{1};
  homeo::HomeoCondition q = homeo::HomeoCondition::minimal();
  for (size_t lvl = 1; lvl < reg.tower().size() && lvl <= 3; ++lvl)
    q = homeo::add_point(q, reg.point_for_level(lvl), col, reg);
  std::vector<uint64_t> witnessed;
  uint64_t k = 0;
  for (int step = 0; step < 3; ++step) {
    homeo::FixResult r = homeo::fix_bit_extend(q, k, reg);
    if (auto* err = std::get_if<std::string>(&r)) trial_fail("fix failed: " + *err);
    auto ok = std::get<homeo::FixOk>(std::move(r));
    q = std::move(ok.q);
    witnessed.push_back(ok.cert.n);
    k = ok.cert.n + 1;
  }
  for (uint64_t n : witnessed) expect(reg.base().member(n), "witnessed bit left X");
  expect(std::is_sorted(witnessed.begin(), witnessed.end()), "witnessed bits not increasing");
  std::vector<poset::PairEntry> pairs;
  for (const auto& [a, b] : q.f) pairs.push_back(poset::PairEntry{a, b});
  containment::RegistryCombView comb(reg);
  auto inv = containment::little_invariant_check(witnessed, pairs, comb);
  expect(inv.pass, "dichotomy violated");
}

// ------------------------------------------------------------------ decomp

void decomp_intervals_trial(Rng& rng, uint64_t) {
  uint64_t count = rng.range(1, 12);
  std::vector<Rational> pts;
  while (pts.size() < count) {
    Rational x = rand_rational01(rng, 500);
    if (std::find(pts.begin(), pts.end(), x) == pts.end()) pts.push_back(x);
  }
  std::sort(pts.begin(), pts.end());
  auto f = decomp::FiniteNwdSet::of(pts);
  auto m = decomp::max_intervals(f);
  expect(m.size() == pts.size() + 1, "wrong interval count");
  for (size_t i = 0; i + 1 < m.size(); ++i)
    expect(m[i].hi() == m[i + 1].lo(), "intervals out of order");
  // grid oracle: off-set points lie in exactly one interval
  for (int s = 1; s < 1000; ++s) {
    Rational x(s, 1000);
    bool in_f = std::find(pts.begin(), pts.end(), x) != pts.end();
    size_t hits = 0;
    for (const auto& iv : m) hits += iv.contains(x) ? 1 : 0;
    expect(hits == (in_f ? 0u : 1u), "grid point coverage wrong");
  }
}

struct DecompTriple {
  decomp::FiniteNwdSet f{{Rational(1, 2)}};
  decomp::FiniteNwdSet g{{Rational(1, 2)}};
  decomp::OrderMap phi;
};

DecompTriple random_triple(Rng& rng) {
  uint64_t count = rng.range(1, 12);
  auto sample = [&](std::vector<Rational>& out) {
    while (out.size() < count) {
      Rational x = rand_rational01(rng, 499);
      if (std::find(out.begin(), out.end(), x) == out.end()) out.push_back(x);
    }
    std::sort(out.begin(), out.end());
  };
  DecompTriple t;
  std::vector<Rational> fp, gp;
  sample(fp);
  sample(gp);
  for (size_t i = 0; i < fp.size(); ++i) t.phi.emplace_back(fp[i], gp[i]);
  t.f = decomp::FiniteNwdSet::of(fp);
  t.g = decomp::FiniteNwdSet::of(gp);
  return t;
}

void decomp_induced_trial(Rng& rng, uint64_t) {
  DecompTriple t = random_triple(rng);
  auto m = decomp::induced_iso(t.phi, t.f, t.g);
  auto mf = decomp::max_intervals(t.f);
  auto mg = decomp::max_intervals(t.g);
  expect(m.size() == mf.size(), "wrong interval count");
  for (size_t i = 0; i < m.size(); ++i) {
    expect(m[i].first == mf[i], "domain interval mismatch");
    expect(m[i].second == mg[i], "range interval mismatch (surjectivity)");
  }
  for (size_t i = 0; i + 1 < m.size(); ++i) {
    expect(m[i].first.hi() <= m[i + 1].first.lo(), "domain order broken");
    expect(m[i].second.hi() <= m[i + 1].second.lo(), "range order broken");
  }
}

void decomp_assemble_trial(Rng& rng, uint64_t) {
  DecompTriple t = random_triple(rng);
  auto m = decomp::induced_iso(t.phi, t.f, t.g);
  std::vector<decomp::OrderMap> psi(m.size());
  uint64_t budget = rng.below(201);
  for (size_t k = 0; k < m.size() && budget > 0; ++k) {
    uint64_t here = rng.below(std::min<uint64_t>(budget, 8) + 1);
    std::vector<Rational> dom, rngv;
    for (uint64_t i = 0; i < here; ++i) {
      dom.push_back(rand_open_subinterval(rng, m[k].first, 997).lo());
      rngv.push_back(rand_open_subinterval(rng, m[k].second, 991).lo());
    }
    std::sort(dom.begin(), dom.end());
    std::sort(rngv.begin(), rngv.end());
    dom.erase(std::unique(dom.begin(), dom.end()), dom.end());
    rngv.erase(std::unique(rngv.begin(), rngv.end()), rngv.end());
    size_t n = std::min(dom.size(), rngv.size());
    for (size_t i = 0; i < n; ++i) psi[k].emplace_back(dom[i], rngv[i]);
    budget -= here;
  }
  auto total = decomp::assemble(t.phi, t.f, t.g, psi);
  expect(decomp::check_order_iso(total), "assembled map not order preserving",
         decomp::order_map_str(total));
  for (const auto& pr : t.phi)
    expect(std::find(total.begin(), total.end(), pr) != total.end(),
           "assembled map does not extend phi");
  // the union maps the sample of A onto the sample of B
  size_t expected = t.phi.size();
  for (const auto& p : psi) expected += p.size();
  expect(total.size() == expected, "assembled map lost points");
}

struct Battery {
  TrialFn fn;
  uint64_t default_trials;
};

const std::map<std::string, Battery>& batteries() {
  static const std::map<std::string, Battery> table = {
      {"exactnum.canonical", {canonical_trial, 500}},
      {"exactnum.partition", {partition_trial, 300}},
      {"exactnum.subset", {subset_oracle_trial, 300}},
      {"setalg.canonical", {upset_canonical_trial, 500}},
      {"setalg.boolean", {boolean_laws_trial, 500}},
      {"setalg.almost", {almost_subset_trial, 500}},
      {"setalg.tower", {tower_battery_trial, 50}},
      {"cantor.roundtrip", {roundtrip_trial, 500}},
      {"cantor.duality", {duality_trial, 500}},
      {"cantor.fact3", {fact3_oracle_trial, 11}},
      {"cantor.prop25", {prop25_trial, 1000}},
      {"cantor.monotone", {monotone_trial, 300}},
      {"poset.axioms", {poset_axioms_trial, 300}},
      {"poset.schedule", {poset_schedule_trial, 60}},
      {"containment.density", {density_trial, 200}},
      {"containment.soundness", {soundness_trial, 50}},
      {"containment.growth", {growth_trial, 25}},
      {"containment.xinf", {xinf_trial, 50}},
      {"homeo.order", {homeo_order_trial, 300}},
      {"homeo.density", {homeo_density_trial, 200}},
      {"homeo.cylinder", {homeo_cylinder_trial, 100}},
      {"homeo.dichotomy", {homeo_dichotomy_trial, 60}},
      {"decomp.intervals", {decomp_intervals_trial, 200}},
      {"decomp.induced", {decomp_induced_trial, 200}},
      {"decomp.assemble", {decomp_assemble_trial, 200}},
  };
  return table;
}

}  // namespace

std::vector<std::string> suite_selectors() {
  std::vector<std::string> out;
  for (const auto& [name, battery] : batteries()) out.push_back(name);
  return out;
}

SuiteResult run_suite(const std::string& selector, uint64_t trials, uint64_t seed) {
  auto it = batteries().find(selector);
  if (it == batteries().end()) {
    std::string msg = "unknown suite selector '" + selector + "'; available:";
    for (const auto& name : suite_selectors()) msg += " " + name;
    throw ValidationError(msg);
  }
  uint64_t n = trials ? trials : it->second.default_trials;
  return run_trials(selector, n, seed, it->second.fn);
}

}  // namespace towerkit
