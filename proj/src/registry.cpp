#include "registry.hpp"

#include <algorithm>

namespace towerkit::poset {

Registry::Registry(UPSet x, towerkit::TowerParams params)
    : tower_(std::move(x), params), protect_limit_(tower_.params().window_horizon) {
  level_point_.resize(1);
}

Registry::Registry(Tower tower)
    : tower_(std::move(tower)), protect_limit_(tower_.params().window_horizon) {
  level_point_.resize(tower_.size());
}

void Registry::set_protect_limit(uint64_t limit) {
  protect_limit_ = std::min(limit, tower_.params().window_horizon);
}

size_t Registry::add_a_point(size_t level) {
  if (level_point_.size() < tower_.size()) level_point_.resize(tower_.size());
  UPSet comp = tower_.level(level).complement();
  Rational v = cantor::lambda_value(comp);
  a_.push_back(APoint{level, std::move(v)});
  level_point_[level] = a_.size() - 1;
  return a_.size() - 1;
}

std::optional<size_t> Registry::find_point_for_level(size_t level) const {
  if (level >= level_point_.size()) return std::nullopt;
  return level_point_[level];
}

size_t Registry::point_for_level(size_t level) {
  if (level >= tower_.size()) throw std::out_of_range("Registry: no such tower level");
  if (auto id = find_point_for_level(level)) return *id;
  return add_a_point(level);
}

size_t Registry::mint_a_in(const Interval& u) {
  const UPSet& x = base();
  uint64_t limit = protect_limit_;
  Bits w = cantor::pick_cylinder(u, tower_.params().depth_cap, [&](uint64_t pos) {
    return pos < limit && x.member(pos);
  });
  size_t level = tower_.mint_level(w);
  size_t id = add_a_point(level);
  if (!u.contains(a_.back().value))
    throw std::logic_error("Registry: minted a-value escaped its target interval");
  return id;
}

UPSet Registry::build_b_set(const Bits& w, uint64_t stamp) {
  // w, then a freshness stamp on the earliest positions outside the base
  // set, zeros at base positions, and the complement pattern beyond the
  // tail start: the result meets the base only below |w|.
  const UPSet& x = base();
  const auto& params = tower_.params();
  if (w.size() > params.depth_cap)
    throw std::invalid_argument("Registry: b prefix exceeds depth cap");

  auto slots = tower_.stamp_slots(w.size());
  uint64_t tail_start = tower_.tail_start();
  uint64_t explicit_len = std::max(tail_start, slots.back() + 1);
  Bits prefix(explicit_len, false);
  std::copy(w.begin(), w.end(), prefix.begin());
  size_t slot_index = 0;
  for (uint64_t n = w.size(); n < explicit_len; ++n) {
    if (slot_index < slots.size() && slots[slot_index] == n) {
      prefix[n] = (stamp >> slot_index) & 1;
      ++slot_index;
    } else if (!x.member(n) && n >= tail_start) {
      prefix[n] = true;
    }
  }
  uint64_t q = x.period_len();
  Bits period(q);
  for (uint64_t i = 0; i < q; ++i) period[i] = !x.member(explicit_len + i);
  return UPSet::from_bits(std::move(prefix), std::move(period));
}

size_t Registry::mint_b_in(const Interval& u, int color) {
  Bits w = cantor::pick_cylinder(u, tower_.params().depth_cap, [](uint64_t) { return false; });
  size_t id = mint_b_prefix(w, color);
  if (!u.contains(b_.back().value))
    throw std::logic_error("Registry: minted b-value escaped its target interval");
  return id;
}

size_t Registry::mint_b_prefix(const Bits& w, int color) {
  UPSet y;
  while (true) {
    if (b_counter_ + 1 >= (1ull << tower_.params().counter_bits))
      throw std::length_error("Registry: b-side freshness counter exhausted");
    ++b_counter_;
    y = build_b_set(w, b_counter_);
    if (b_texts_.insert(y.str()).second) break;  // stamp grids can collide
  }
  if (y.cardinality_class() != CardClass::InfiniteCoinfinite)
    throw std::runtime_error("Registry: b-mint produced a degenerate set");
  if (!y.almost_disjoint_bound(base()))
    throw std::logic_error("Registry: b-mint not almost disjoint from the base");
  Rational v = cantor::lambda_value(y);
  b_.push_back(BPoint{std::move(y), std::move(v), color});
  return b_.size() - 1;
}

}  // namespace towerkit::poset
