#pragma once

#include "upset.hpp"

#include <cstdint>
#include <string>
#include <unordered_set>
#include <vector>

namespace towerkit {

struct TowerParams {
  uint64_t window_horizon = 48;  // membership below this tracks the base set
  uint64_t counter_bits = 20;    // freshness stamp width
  uint64_t mint_modulus = 512;   // rank-window modulus for tail thinning
  uint64_t depth_cap = 40;       // max complement-prefix length for new levels
};

struct TowerLevel {
  UPSet set;
  uint64_t subset_bound = 0;  // least k with set \ k inside the previous level
};

// Finite truncation of a tower over the base set X = level 0: an ordered
// list of infinite, coinfinite sets, each almost contained in all earlier
// ones. New levels are produced two ways:
//
//   push_level(w)  -- a fresh thinning step: the tail drops one more rank
//                     residue (mod mint_modulus) of X's tail, so the new
//                     level sits strictly below everything minted so far.
//   mint_level(w)  -- shares the current step's tail; levels inside one
//                     batch differ by prefix and freshness stamp only.
//
// Every level's complement extends the requested bit string w; positions in
// [|w|, window_horizon) copy X, so membership of small numbers stays
// predictable for the clear-level searches built on top.
class Tower {
 public:
  Tower(UPSet x, TowerParams params = {});

  // Explicit levels: the first is the base; the chain must strictly
  // decrease. Fresh mints then thin the tail of the last given level.
  Tower(std::vector<UPSet> levels, TowerParams params);

  size_t size() const { return levels_.size(); }
  const UPSet& level(size_t i) const { return levels_.at(i).set; }
  uint64_t subset_bound(size_t i) const { return levels_.at(i).subset_bound; }
  const UPSet& base() const { return levels_.front().set; }
  const TowerParams& params() const { return params_; }
  uint64_t tail_start() const { return tail_start_; }

  void begin_batch();
  size_t mint_level(const Bits& w);
  size_t push_level(const Bits& w) {
    begin_batch();
    return mint_level(w);
  }

  uint64_t thinning_steps() const { return drops_; }
  uint64_t mint_count() const { return counter_; }

  // Positions of the freshness stamp: the first counter_bits positions
  // outside the base set at or beyond `from` (LSB first).
  std::vector<uint64_t> stamp_slots(uint64_t from) const;

 private:
  void init_params();
  UPSet build_tail(uint64_t drops) const;
  UPSet build_level(const Bits& w);

  UPSet x_;
  UPSet tail_base_;  // whose tail fresh mints thin; the base or the explicit bottom
  TowerParams params_;
  uint64_t tail_start_ = 0;
  uint64_t drops_ = 0;
  uint64_t counter_ = 0;
  bool batch_open_ = false;
  UPSet current_tail_;
  std::vector<TowerLevel> levels_;
  std::unordered_set<std::string> level_texts_;  // freshness stamps use shifting
                                                 // slot grids, so collisions are
                                                 // possible and must be rejected
};

}  // namespace towerkit
