#include "homeo.hpp"

#include <algorithm>
#include <numeric>

namespace towerkit::homeo {

namespace {

constexpr uint64_t kMaxLevel = 20;

void require_level(uint64_t level) {
  if (level > kMaxLevel)
    throw std::length_error("homeo: permutation level " + std::to_string(level) +
                            " exceeds the cap " + std::to_string(kMaxLevel));
}

uint64_t bit_of_index(uint32_t t, uint64_t level, uint64_t pos) {
  return (t >> (level - 1 - pos)) & 1u;
}

}  // namespace

bool HomeoCondition::dom_contains(size_t a_id) const {
  return std::any_of(f.begin(), f.end(), [&](const auto& pr) { return pr.first == a_id; });
}

uint32_t prefix_index(const UPSet& s, uint64_t n) {
  uint32_t u = 0;
  for (uint64_t i = 0; i < n; ++i) u = (u << 1) | (s.member(i) ? 1u : 0u);
  return u;
}

uint64_t first_difference(const UPSet& a, const UPSet& b) {
  if (a == b) throw std::invalid_argument("first_difference: sets are equal");
  uint64_t horizon = a.prefix_len() + b.prefix_len() +
                     std::lcm(a.period_len(), b.period_len());
  for (uint64_t n = 0; n < horizon; ++n)
    if (a.member(n) != b.member(n)) return n;
  throw std::logic_error("first_difference: no difference inside the horizon");
}

CheckResult validate(const HomeoCondition& p, const Coloring& col, const Registry& reg) {
  auto fail = [](std::string why) { return CheckResult{false, std::move(why)}; };

  if (p.level > kMaxLevel) return fail("permutation level exceeds the cap");
  if (p.pi.size() != (1ull << p.level)) return fail("pi table size is not 2^level");
  std::vector<bool> seen(p.pi.size(), false);
  for (uint32_t img : p.pi) {
    if (img >= p.pi.size() || seen[img]) return fail("pi is not a permutation");
    seen[img] = true;
  }

  for (size_t i = 0; i < p.f.size(); ++i) {
    for (size_t j = i + 1; j < p.f.size(); ++j) {
      if (p.f[i].first == p.f[j].first || p.f[i].second == p.f[j].second)
        return fail("f is not injective");
    }
  }

  for (const auto& [a, b] : p.f) {
    if (col.a_color(reg.a(a).level) != reg.b(b).color)
      return fail("f does not preserve the colouring");
  }

  for (const auto& [a, b] : p.f) {
    uint32_t ua = prefix_index(reg.a_set(a).complement(), p.level);
    uint32_t ub = prefix_index(reg.b(b).set, p.level);
    if (p.pi[ua] != ub) return fail("f does not respect pi");
  }
  return CheckResult{};
}

bool extends(const HomeoCondition& p, const HomeoCondition& q) {
  if (p.level < q.level) return false;
  for (const auto& pr : q.f)
    if (std::find(p.f.begin(), p.f.end(), pr) == p.f.end()) return false;
  uint64_t shift = p.level - q.level;
  for (uint32_t t = 0; t < p.pi.size(); ++t)
    if ((p.pi[t] >> shift) != q.pi[t >> shift]) return false;
  return true;
}

namespace {

// Extend pi from p.level to target_level, fiberwise identity on the new
// bits except where the f-constraints dictate suffix images.
HomeoCondition extend_level(const HomeoCondition& p, uint64_t target_level, const Registry& reg) {
  require_level(target_level);
  if (target_level == p.level) return p;
  uint64_t extra = target_level - p.level;
  uint64_t fiber = 1ull << extra;

  // per-fiber suffix constraints from f
  struct Constraint {
    uint32_t from, to;
  };
  std::vector<std::vector<Constraint>> constraints(p.pi.size());
  for (const auto& [a, b] : p.f) {
    UPSet dom_set = reg.a_set(a).complement();
    uint32_t u = prefix_index(dom_set, p.level);
    uint32_t va = prefix_index(dom_set, target_level) & (fiber - 1);
    uint32_t wb = prefix_index(reg.b(b).set, target_level) & (fiber - 1);
    constraints[u].push_back(Constraint{va, wb});
  }

  HomeoCondition q;
  q.f = p.f;
  q.level = target_level;
  q.pi.assign(1ull << target_level, 0);
  for (uint32_t u = 0; u < p.pi.size(); ++u) {
    std::vector<int64_t> sigma(fiber, -1);
    std::vector<bool> used(fiber, false);
    for (const auto& c : constraints[u]) {
      if (sigma[c.from] >= 0 || used[c.to])
        throw std::logic_error("homeo: inconsistent suffix constraints (separation missing)");
      sigma[c.from] = c.to;
      used[c.to] = true;
    }
    for (uint64_t v = 0; v < fiber; ++v)
      if (sigma[v] < 0 && !used[v]) {
        sigma[v] = static_cast<int64_t>(v);
        used[v] = true;
      }
    std::vector<uint32_t> leftovers;
    for (uint32_t w = 0; w < fiber; ++w)
      if (!used[w]) leftovers.push_back(w);
    size_t next = 0;
    for (uint64_t v = 0; v < fiber; ++v)
      if (sigma[v] < 0) sigma[v] = leftovers[next++];
    for (uint64_t v = 0; v < fiber; ++v)
      q.pi[(static_cast<uint64_t>(u) << extra) | v] =
          (p.pi[u] << extra) | static_cast<uint32_t>(sigma[v]);
  }
  return q;
}

}  // namespace

HomeoCondition separate(const HomeoCondition& p, const Registry& reg) {
  uint64_t level = p.level;
  auto widen = [&level](const std::vector<UPSet>& sets) {
    for (size_t i = 0; i < sets.size(); ++i)
      for (size_t j = i + 1; j < sets.size(); ++j)
        level = std::max(level, first_difference(sets[i], sets[j]) + 1);
  };
  std::vector<UPSet> dom, rng;
  for (const auto& [a, b] : p.f) {
    dom.push_back(reg.a_set(a).complement());
    rng.push_back(reg.b(b).set);
  }
  widen(dom);
  widen(rng);
  return extend_level(p, level, reg);
}

FixResult fix_bit_extend(const HomeoCondition& p, uint64_t k, Registry& reg, uint64_t search_cap) {
  try {
    HomeoCondition sep = separate(p, reg);
    const UPSet& x = reg.base();

    std::vector<UPSet> avoid;
    for (const auto& [a, b] : sep.f) {
      avoid.push_back(reg.a_set(a).complement());
      avoid.push_back(reg.b(b).set);
    }
    std::optional<uint64_t> n;
    for (uint64_t cand = std::max(k, sep.level); cand <= search_cap; ++cand) {
      if (!x.member(cand)) continue;
      if (std::none_of(avoid.begin(), avoid.end(),
                       [cand](const UPSet& s) { return s.member(cand); })) {
        n = cand;
        break;
      }
    }
    if (!n)
      return std::string("fix_bit_extend: no usable level in [" + std::to_string(k) + "," +
                         std::to_string(search_cap) + "]");

    // widen to level n first (identity/constraints), then add the preserved
    // final bit; every mapped point has bit n clear, so the constraints stay
    // inside the b = 0 half and the extension is consistent.
    HomeoCondition wide = extend_level(sep, *n, reg);
    require_level(*n + 1);
    HomeoCondition q;
    q.f = wide.f;
    q.level = *n + 1;
    q.pi.assign(1ull << (*n + 1), 0);
    for (uint32_t t = 0; t < wide.pi.size(); ++t) {
      q.pi[(static_cast<uint64_t>(t) << 1) | 0] = (wide.pi[t] << 1) | 0;
      q.pi[(static_cast<uint64_t>(t) << 1) | 1] = (wide.pi[t] << 1) | 1;
    }
    return FixOk{std::move(q), FixCertificate{*n, *n + 1}};
  } catch (const std::exception& e) {
    return std::string(e.what());
  }
}

CheckResult check_fix_certificate(const HomeoCondition& q, uint64_t n) {
  if (n + 1 > q.level)
    throw std::invalid_argument("check_fix_certificate: level too shallow for bit " +
                                std::to_string(n));
  for (uint32_t t = 0; t < q.pi.size(); ++t) {
    if (bit_of_index(t, q.level, n) != bit_of_index(q.pi[t], q.level, n))
      return CheckResult{false, "pi moves string " + std::to_string(t) + " across the bit-" +
                                    std::to_string(n) + " classes"};
  }
  return CheckResult{};
}

HomeoCondition add_point(const HomeoCondition& p, size_t a_id, const Coloring& col, Registry& reg) {
  if (p.dom_contains(a_id)) throw std::invalid_argument("add_point: already in the domain");
  HomeoCondition sep = separate(p, reg);
  UPSet dom_set = reg.a_set(a_id).complement();
  uint32_t u = prefix_index(dom_set, sep.level);
  uint32_t target = sep.pi[u];
  Bits w(sep.level);
  for (uint64_t i = 0; i < sep.level; ++i) w[i] = bit_of_index(target, sep.level, i) != 0;
  size_t b_id = reg.mint_b_prefix(w, col.a_color(reg.a(a_id).level));
  sep.f.emplace_back(a_id, b_id);
  auto chk = validate(sep, col, reg);
  if (!chk.ok) throw std::logic_error("add_point: produced an invalid condition: " + chk.reason);
  return sep;
}

}  // namespace towerkit::homeo
