#include "condition.hpp"

#include <algorithm>

namespace towerkit::poset {

bool Condition::dom_contains(size_t a_id) const {
  return std::any_of(pairs_.begin(), pairs_.end(),
                     [&](const PairEntry& p) { return p.a == a_id; });
}

bool Condition::range_contains(size_t b_id) const {
  return std::any_of(pairs_.begin(), pairs_.end(),
                     [&](const PairEntry& p) { return p.b == b_id; });
}

bool Condition::has_pair(size_t a_id, size_t b_id) const {
  return std::any_of(pairs_.begin(), pairs_.end(),
                     [&](const PairEntry& p) { return p.a == a_id && p.b == b_id; });
}

std::optional<size_t> Condition::image_of(size_t a_id) const {
  for (const auto& p : pairs_)
    if (p.a == a_id) return p.b;
  return std::nullopt;
}

bool Condition::is_partial_iso(const PointView& v) const {
  for (size_t i = 0; i + 1 < pairs_.size(); ++i) {
    if (!(v.a_value(pairs_[i].a) < v.a_value(pairs_[i + 1].a))) return false;
    if (!(v.b_value(pairs_[i].b) < v.b_value(pairs_[i + 1].b))) return false;
  }
  // values must also stay inside the sentinel frame (0, 1)
  if (!pairs_.empty()) {
    if (!(Rational(0) < v.a_value(pairs_.front().a))) return false;
    if (!(v.a_value(pairs_.back().a) < Rational(1))) return false;
    if (!(Rational(0) < v.b_value(pairs_.front().b))) return false;
    if (!(v.b_value(pairs_.back().b) < Rational(1))) return false;
  }
  return true;
}

Condition Condition::restrict_to(const std::vector<size_t>& a_ids) const {
  Condition q;
  for (size_t id : a_ids)
    if (!dom_contains(id))
      throw std::invalid_argument("restrict: id " + std::to_string(id) + " not in the domain");
  for (size_t i = 0; i < pairs_.size(); ++i) {
    if (std::find(a_ids.begin(), a_ids.end(), pairs_[i].a) != a_ids.end()) {
      q.pairs_.push_back(pairs_[i]);
      q.a_values_.push_back(a_values_[i]);
    }
  }
  return q;
}

bool Condition::extends(const Condition& p) const {
  return std::all_of(p.pairs_.begin(), p.pairs_.end(),
                     [&](const PairEntry& e) { return has_pair(e.a, e.b); });
}

Gap Condition::gap_of(const PointView& v, const Rational& x) const {
  auto it = std::lower_bound(a_values_.begin(), a_values_.end(), x);
  if (it != a_values_.end() && *it == x)
    throw std::invalid_argument("gap_of: x is a domain value");
  size_t idx = it - a_values_.begin();
  Gap g;
  g.x0 = Rational(0);
  g.x1 = Rational(1);
  Rational z0(0), z1(1);
  if (idx > 0) {
    g.left = pairs_[idx - 1].a;
    g.x0 = a_values_[idx - 1];
    z0 = v.b_value(pairs_[idx - 1].b);
  }
  if (idx < pairs_.size()) {
    g.right = pairs_[idx].a;
    g.x1 = a_values_[idx];
    z1 = v.b_value(pairs_[idx].b);
  }
  g.image = Interval::open(z0, z1);
  return g;
}

void Condition::insert_pair(const PointView& v, size_t a_id, size_t b_id) {
  if (dom_contains(a_id)) throw std::invalid_argument("insert_pair: a already in the domain");
  if (range_contains(b_id)) throw std::invalid_argument("insert_pair: b already in the range");
  Rational av = v.a_value(a_id);
  auto it = std::lower_bound(a_values_.begin(), a_values_.end(), av);
  size_t idx = it - a_values_.begin();
  pairs_.insert(pairs_.begin() + idx, PairEntry{a_id, b_id});
  a_values_.insert(a_values_.begin() + idx, std::move(av));
}

size_t Condition::extend_in_place(size_t a_id, const Interval& u, Registry& reg) {
  if (dom_contains(a_id))
    throw std::invalid_argument("dense_map_extend: point already in the domain");
  RegistryView view(reg);
  Gap gap = gap_of(view, reg.a(a_id).value);
  if (!interval_subset(u, gap.image))
    throw std::invalid_argument("dense_map_extend: target " + u.str() +
                                " not inside the image gap " + gap.image.str());
  size_t b_id = reg.mint_b_in(u);
  insert_pair(view, a_id, b_id);
  return b_id;
}

std::pair<Condition, size_t> Condition::dense_map_extend(const Condition& p, size_t a_id,
                                                         const Interval& u, Registry& reg) {
  Condition q = p;
  size_t b_id = q.extend_in_place(a_id, u, reg);
  return {std::move(q), b_id};
}

}  // namespace towerkit::poset
