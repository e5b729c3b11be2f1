#pragma once

#include "interval.hpp"
#include "rational.hpp"
#include "registry.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace towerkit::poset {

// Read-only access to point values; implemented by the live Registry and by
// deserialized report data, so checks can replay from a report alone.
class PointView {
 public:
  virtual ~PointView() = default;
  virtual Rational a_value(size_t id) const = 0;
  virtual Rational b_value(size_t id) const = 0;
};

class RegistryView final : public PointView {
 public:
  explicit RegistryView(const Registry& reg) : reg_(reg) {}
  Rational a_value(size_t id) const override { return reg_.a(id).value; }
  Rational b_value(size_t id) const override { return reg_.b(id).value; }

 private:
  const Registry& reg_;
};

struct PairEntry {
  size_t a;
  size_t b;
  friend bool operator==(const PairEntry& x, const PairEntry& y) {
    return x.a == y.a && x.b == y.b;
  }
};

struct Gap {
  std::optional<size_t> left, right;  // domain neighbours; sentinel when absent
  Rational x0, x1;                    // neighbour values (0 and 1 for sentinels)
  Interval image = Interval::open(Rational(0), Rational(1));
};

// Finite partial order-isomorphism between registered a- and b-points,
// kept sorted by a-value. The sentinels 0 -> 0 and 1 -> 1 are implicit and
// never stored.
class Condition {
 public:
  Condition() = default;

  size_t size() const { return pairs_.size(); }
  bool empty() const { return pairs_.empty(); }
  const std::vector<PairEntry>& pairs() const { return pairs_; }

  bool dom_contains(size_t a_id) const;
  bool range_contains(size_t b_id) const;
  bool has_pair(size_t a_id, size_t b_id) const;
  std::optional<size_t> image_of(size_t a_id) const;

  // Both coordinate sequences strictly increase together.
  bool is_partial_iso(const PointView& v) const;

  // Sub-condition on the given domain ids; throws on an unknown id.
  Condition restrict_to(const std::vector<size_t>& a_ids) const;

  // True iff *this contains every pair of p.
  bool extends(const Condition& p) const;

  // Neighbouring domain points around x and the open image gap between
  // their images; x must not be a domain value.
  Gap gap_of(const PointView& v, const Rational& x) const;

  // p plus the single pair (a -> fresh b inside the interior of u). u must
  // be an open interval inside the image gap of a.
  static std::pair<Condition, size_t> dense_map_extend(const Condition& p, size_t a_id,
                                                       const Interval& u, Registry& reg);

  // Same extension applied in place; the workhorse for long runs.
  size_t extend_in_place(size_t a_id, const Interval& u, Registry& reg);

  // Insertion preserving a-value order; rejects duplicate endpoints.
  void insert_pair(const PointView& v, size_t a_id, size_t b_id);

 private:
  std::vector<PairEntry> pairs_;  // sorted by a-value
  std::vector<Rational> a_values_;
};

}  // namespace towerkit::poset
