#include "containment.hpp"

#include <algorithm>
#include <unordered_map>

namespace towerkit::containment {

namespace {

using towerkit::Interval;
using towerkit::Rational;

// Binary expansion bits 0..cap of a non-dyadic x in (0,1); bit n set iff x
// lies in a good-at-n interval.
std::vector<bool> expansion_bits(const Rational& x, uint64_t cap) {
  BigInt e = floor_mul_pow2(x, static_cast<unsigned>(cap + 1));
  std::vector<bool> bits(cap + 1);
  for (uint64_t n = 0; n <= cap; ++n) bits[n] = ((e >> static_cast<unsigned>(cap - n)) & 1) != 0;
  return bits;
}

struct DomainSnapshot {
  std::vector<Rational> xs;  // sorted domain values
  std::vector<Rational> zs;  // their images, same order
};

DomainSnapshot snapshot(const Condition& p, const Registry& reg) {
  DomainSnapshot s;
  s.xs.reserve(p.size());
  s.zs.reserve(p.size());
  for (const auto& pr : p.pairs()) {
    s.xs.push_back(reg.a(pr.a).value);
    s.zs.push_back(reg.b(pr.b).value);
  }
  return s;
}

}  // namespace

uint64_t find_clear_level(const Condition& p, const Registry& reg, uint64_t k,
                          uint64_t search_cap) {
  const UPSet& x = reg.base();
  std::vector<std::vector<bool>> dom_bits;
  dom_bits.reserve(p.size());
  for (const auto& pr : p.pairs()) dom_bits.push_back(expansion_bits(reg.a(pr.a).value, search_cap));

  for (uint64_t n = k; n <= search_cap; ++n) {
    if (!x.member(n)) continue;
    bool clear = std::none_of(dom_bits.begin(), dom_bits.end(),
                              [n](const std::vector<bool>& b) { return b[n]; });
    if (clear) return n;
  }

  UPSet meet = x;
  for (const auto& pr : p.pairs()) meet = set_intersect(meet, reg.a_set(pr.a));
  throw std::runtime_error("find_clear_level: no clear level in [" + std::to_string(k) + "," +
                           std::to_string(search_cap) + "]; X meet domain levels = " + meet.str());
}

std::vector<std::pair<size_t, std::optional<size_t>>> flank_points(const Condition& p, uint64_t n,
                                                                   Registry& reg) {
  DomainSnapshot dom = snapshot(p, reg);
  uint64_t count = 1ull << n;
  std::vector<std::pair<size_t, std::optional<size_t>>> out;
  out.reserve(count);

  reg.begin_mint_batch();
  Rational left_floor(0);  // value of the previous flank (or sentinel 0)
  for (uint64_t i = 0; i < count; ++i) {
    try {
      Interval t = cantor::good_interval({n, i});
      auto it = std::lower_bound(dom.xs.begin(), dom.xs.end(), t.lo());
      Rational x_left = (it == dom.xs.begin()) ? Rational(0) : *(it - 1);
      Rational lo = std::max(x_left, left_floor);

      size_t a0 = reg.mint_a_in(Interval::open(lo, t.lo()));
      std::optional<size_t> a1;
      if (i + 1 < count) {
        auto rit = std::upper_bound(dom.xs.begin(), dom.xs.end(), t.hi());
        Rational x_right = (rit == dom.xs.end()) ? Rational(1) : *rit;
        Rational next_lo = cantor::good_interval({n, i + 1}).lo();
        a1 = reg.mint_a_in(Interval::open(t.hi(), std::min(x_right, next_lo)));
        left_floor = reg.a(*a1).value;
      }
      out.emplace_back(a0, a1);
    } catch (const std::exception& e) {
      throw std::runtime_error("flank_points: interval " + std::to_string(i) + " of 2^" +
                               std::to_string(n) + ": " + e.what());
    }
  }
  return out;
}

std::pair<uint64_t, std::vector<GoodInterval>> choose_targets(const Condition& p,
                                                              const Registry& reg, uint64_t n,
                                                              uint64_t level_cap) {
  DomainSnapshot dom = snapshot(p, reg);
  const UPSet& x = reg.base();
  uint64_t count = 1ull << n;

  // group the good-at-n intervals by the domain gap containing them
  struct GapGroup {
    size_t gap_index;  // index of the left neighbour (0 = sentinel)
    uint64_t members;
  };
  std::vector<size_t> gap_of_t(count);
  std::vector<GapGroup> groups;
  for (uint64_t i = 0; i < count; ++i) {
    Interval t = cantor::good_interval({n, i});
    size_t gi = std::lower_bound(dom.xs.begin(), dom.xs.end(), t.lo()) - dom.xs.begin();
    gap_of_t[i] = gi;
    if (!groups.empty() && groups.back().gap_index == gi)
      ++groups.back().members;
    else
      groups.push_back(GapGroup{gi, 1});
  }

  auto gap_interval = [&](size_t gi) {
    Rational z0 = (gi == 0) ? Rational(0) : dom.zs[gi - 1];
    Rational z1 = (gi == dom.zs.size()) ? Rational(1) : dom.zs[gi];
    return Interval::open(z0, z1);
  };

  // least l in X beyond n whose good intervals fit in every partition piece
  std::optional<Rational> min_piece;
  for (const auto& g : groups) {
    Rational piece = gap_interval(g.gap_index).length() / Rational(BigInt(g.members));
    if (!min_piece || piece < *min_piece) min_piece = piece;
  }
  std::optional<uint64_t> l;
  for (uint64_t cand = n + 1; cand <= level_cap; ++cand) {
    if (!x.member(cand)) continue;
    if (Rational(BigInt(3), BigInt(1) << static_cast<unsigned>(cand + 1)) < *min_piece) {
      l = cand;
      break;
    }
  }
  if (!l)
    throw std::runtime_error("choose_targets: no target level up to " + std::to_string(level_cap) +
                             " fits pieces of length " + min_piece->str());

  std::vector<GoodInterval> s;
  s.reserve(count);
  uint64_t i = 0;
  for (const auto& g : groups) {
    auto pieces = equal_partition(gap_interval(g.gap_index), g.members);
    for (uint64_t r = 0; r < g.members; ++r, ++i) {
      if (i + 1 == count) {
        // the sentinel-flanked final interval targets the rightmost good
        // interval, whose right end is 1
        s.push_back(GoodInterval{*l, (BigInt(1) << static_cast<unsigned>(*l)) - 1});
      } else {
        s.push_back(cantor::find_good_within(pieces[r], *l));
      }
    }
  }

  for (size_t j = 0; j + 1 < s.size(); ++j)
    if (s[j].i >= s[j + 1].i) throw std::logic_error("choose_targets: targets not increasing");
  return {*l, std::move(s)};
}

ForceResult force_containment(const Condition& p, uint64_t k, Registry& reg, RunCaps caps) {
  try {
    uint64_t n = find_clear_level(p, reg, k, caps.search_cap);
    if (n >= 30)
      throw std::runtime_error("force_containment: clear level " + std::to_string(n) +
                               " needs 2^" + std::to_string(n) +
                               " entries; tighten the scenario");
    auto flanks = flank_points(p, n, reg);
    auto [l, targets] = choose_targets(p, reg, n, caps.level_cap);

    Condition q = p;
    Certificate cert;
    cert.k = k;
    cert.n = n;
    cert.l = l;
    uint64_t count = 1ull << n;
    for (uint64_t i = 0; i < count; ++i) {
      try {
        Interval s = cantor::good_interval(targets[i]);
        CertEntry e;
        e.t_index = i;
        e.s_index = targets[i].i;
        e.a0 = flanks[i].first;
        bool last = (i + 1 == count);
        Interval u0 = last ? Interval::open(s.lo(), Rational(1)) : Interval::open(s.lo(), s.hi());
        e.b0 = q.extend_in_place(e.a0, u0, reg);
        if (!last) {
          e.a1 = flanks[i].second;
          e.b1 = q.extend_in_place(*e.a1, Interval::open(reg.b(e.b0).value, s.hi()), reg);
        }
        cert.entries.push_back(e);
      } catch (const std::exception& e) {
        throw std::runtime_error("image placement for entry " + std::to_string(i) + " of 2^" +
                                 std::to_string(n) + " at target level " + std::to_string(l) +
                                 ": " + e.what());
      }
    }

    poset::RegistryView view(reg);
    CheckResult chk = check_certificate(q, cert, view, reg.base());
    if (!chk.ok) throw std::logic_error("force_containment: self-check failed: " + chk.reason);
    return ForceOk{std::move(q), std::move(cert)};
  } catch (const std::exception& e) {
    return std::string(e.what());
  }
}

CheckResult check_certificate(const Condition& q, const Certificate& cert, const PointView& points,
                              const UPSet& x) {
  auto fail = [](std::string why) { return CheckResult{false, std::move(why)}; };

  if (!x.member(cert.n) || cert.n < cert.k) return fail("n not in X beyond k");
  if (!x.member(cert.l) || cert.l < cert.n) return fail("l not in X beyond n");
  if (cert.n >= 30) return fail("clear level too deep to verify");
  if (cert.l >= 100000) return fail("target level too deep to verify");
  uint64_t count = 1ull << cert.n;
  if (cert.entries.size() != count) return fail("entry count is not 2^n");

  if (!q.is_partial_iso(points)) return fail("q is not a partial isomorphism");
  std::unordered_map<size_t, size_t> image;
  for (const auto& pr : q.pairs()) image.emplace(pr.a, pr.b);
  auto certified = [&](size_t a, size_t b) {
    auto it = image.find(a);
    return it != image.end() && it->second == b;
  };

  for (uint64_t i = 0; i < count; ++i) {
    const CertEntry& e = cert.entries[i];
    if (e.t_index != i) return fail("entry " + std::to_string(i) + ": wrong interval index");
    bool last = (i + 1 == count);
    if (last != (!e.a1.has_value()) || last != (!e.b1.has_value()))
      return fail("entry " + std::to_string(i) + ": sentinel flank on the wrong entry");
    if (e.s_index >= (BigInt(1) << static_cast<unsigned>(cert.l)))
      return fail("entry " + std::to_string(i) + ": target not good at l");
    if (last && e.s_index != (BigInt(1) << static_cast<unsigned>(cert.l)) - 1)
      return fail("final entry: target must be the rightmost good-at-l interval");
    if (i > 0 && cert.entries[i - 1].s_index >= e.s_index)
      return fail("targets not strictly increasing at entry " + std::to_string(i));

    Interval t = cantor::good_interval({cert.n, e.t_index});
    Interval s = cantor::good_interval({cert.l, e.s_index});
    if (!certified(e.a0, e.b0))
      return fail("entry " + std::to_string(i) + ": (a0,b0) not a pair of q");
    Rational a0v = points.a_value(e.a0), b0v = points.b_value(e.b0);
    if (!(a0v < t.lo())) return fail("entry " + std::to_string(i) + ": a0 not below the interval");
    if (!(s.lo() < b0v && b0v < s.hi()))
      return fail("entry " + std::to_string(i) + ": image not in the target interior");
    if (!last) {
      if (!certified(*e.a1, *e.b1))
        return fail("entry " + std::to_string(i) + ": (a1,b1) not a pair of q");
      Rational a1v = points.a_value(*e.a1), b1v = points.b_value(*e.b1);
      if (!(t.hi() < a1v))
        return fail("entry " + std::to_string(i) + ": a1 not above the interval");
      if (!(b0v < b1v && b1v < s.hi()))
        return fail("entry " + std::to_string(i) + ": image not in the target interior");
    }
  }
  return CheckResult{};
}

std::vector<std::pair<UPSet, UPSet>> induced_map(const Condition& q, const CombinatorialView& v) {
  std::vector<std::pair<UPSet, UPSet>> f;
  f.reserve(q.size());
  for (const auto& pr : q.pairs())
    f.emplace_back(v.a_level_set(pr.a).complement(), v.b_set(pr.b));
  return f;
}

std::vector<uint64_t> little_xinf(const std::vector<std::pair<UPSet, UPSet>>& f, const UPSet& x,
                                  uint64_t horizon) {
  struct Entry {
    const UPSet* y;
    std::optional<uint64_t> max_common;  // max of X meet Z
  };
  std::vector<Entry> entries;
  entries.reserve(f.size());
  for (const auto& [y, z] : f) {
    auto bound = z.almost_disjoint_bound(x);
    if (!bound)
      throw std::invalid_argument("little_xinf: a value of f is not almost disjoint from X");
    std::optional<uint64_t> mc;
    if (*bound > 0) mc = *bound - 1;
    entries.push_back(Entry{&y, mc});
  }

  std::vector<uint64_t> out;
  for (uint64_t n = 0; n < horizon; ++n) {
    if (!x.member(n)) continue;
    bool good = std::all_of(entries.begin(), entries.end(), [n](const Entry& e) {
      if (!e.y->member(n)) return true;
      return e.max_common && *e.max_common >= n;
    });
    if (good) out.push_back(n);
  }
  return out;
}

InvariantReport little_invariant_check(const std::vector<uint64_t>& witnessed,
                                       const std::vector<poset::PairEntry>& pairs,
                                       const CombinatorialView& v) {
  InvariantReport rep;
  const UPSet& x = v.base();
  struct Cached {
    size_t a_id, level;
    UPSet level_set;
    uint64_t k_bound;
  };
  std::vector<Cached> cache;
  cache.reserve(pairs.size());
  for (const auto& pr : pairs) {
    auto bound = v.b_set(pr.b).almost_disjoint_bound(x);
    if (!bound) {
      rep.pass = false;
      rep.rows.push_back(InvariantRow{0, pr.a, v.a_level_index(pr.a), false, 0, false});
      continue;
    }
    cache.push_back(Cached{pr.a, v.a_level_index(pr.a), v.a_level_set(pr.a), *bound});
  }
  for (uint64_t n : witnessed) {
    for (const auto& c : cache) {
      bool in_level = c.level_set.member(n);
      bool ok = in_level || n <= c.k_bound;
      rep.rows.push_back(InvariantRow{n, c.a_id, c.level, in_level, c.k_bound, ok});
      if (!ok) rep.pass = false;
    }
  }
  return rep;
}

InvariantReport little_invariant_check(const std::vector<uint64_t>& witnessed, const Condition& q,
                                       const Registry& reg) {
  RegistryCombView v(reg);
  return little_invariant_check(witnessed, q.pairs(), v);
}

}  // namespace towerkit::containment
