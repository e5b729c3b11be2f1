#pragma once

#include "cantor.hpp"
#include "interval.hpp"
#include "rational.hpp"
#include "tower.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

namespace towerkit::poset {

using towerkit::Bits;
using towerkit::Interval;
using towerkit::Rational;
using towerkit::Tower;
using towerkit::UPSet;

struct APoint {
  size_t level;    // index into the tower
  Rational value;  // lambda image of the level's complement
};

struct BPoint {
  UPSet set;  // infinite, coinfinite, almost disjoint from the base set
  Rational value;
  int color = 0;
};

// Point registry for one run: the a-side points are lambda images of
// tower-level complements, the b-side points are minted sets almost
// disjoint from the base. Values are pairwise distinct per side and never
// dyadic. Single writer; reads are safe concurrently once minting stops.
class Registry {
 public:
  Registry(UPSet x, towerkit::TowerParams params = {});
  explicit Registry(Tower tower);

  Tower& tower() { return tower_; }
  const Tower& tower() const { return tower_; }
  const UPSet& base() const { return tower_.base(); }

  size_t a_count() const { return a_.size(); }
  size_t b_count() const { return b_.size(); }
  const APoint& a(size_t id) const { return a_.at(id); }
  const BPoint& b(size_t id) const { return b_.at(id); }
  const UPSet& a_set(size_t id) const { return tower_.level(a_.at(id).level); }

  // a-point for an existing tower level (one per level; idempotent).
  size_t point_for_level(size_t level);
  std::optional<size_t> find_point_for_level(size_t level) const;

  // Mint a fresh tower level whose complement value lands strictly inside
  // the open interval u. 1-bits below protect_limit at base-set positions
  // are avoided when possible, so upcoming clear-level searches survive.
  size_t mint_a_in(const Interval& u);

  void begin_mint_batch() { tower_.begin_batch(); }

  // Mint a fresh b-point with value strictly inside u, using the
  // least-depth leftmost fitting cylinder.
  size_t mint_b_in(const Interval& u, int color = 0);

  // Mint a b-point whose characteristic sequence extends w.
  size_t mint_b_prefix(const Bits& w, int color = 0);

  uint64_t protect_limit() const { return protect_limit_; }
  void set_protect_limit(uint64_t limit);

 private:
  UPSet build_b_set(const Bits& w, uint64_t stamp);
  size_t add_a_point(size_t level);

  Tower tower_;
  uint64_t protect_limit_;
  uint64_t b_counter_ = 0;
  std::vector<APoint> a_;
  std::vector<BPoint> b_;
  std::unordered_set<std::string> b_texts_;
  std::vector<std::optional<size_t>> level_point_;  // tower level -> a-point id
};

}  // namespace towerkit::poset
