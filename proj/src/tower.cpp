#include "tower.hpp"

#include <algorithm>
#include <numeric>

namespace towerkit {

Tower::Tower(UPSet x, TowerParams params) : x_(std::move(x)), tail_base_(x_), params_(params) {
  init_params();
  levels_.push_back(TowerLevel{x_, 0});
}

Tower::Tower(std::vector<UPSet> levels, TowerParams params) : params_(params) {
  if (levels.empty()) throw std::invalid_argument("Tower: explicit level list is empty");
  x_ = levels.front();
  tail_base_ = levels.back();
  for (size_t i = 0; i + 1 < levels.size(); ++i) {
    if (!levels[i + 1].almost_subset_bound(levels[i]))
      throw std::invalid_argument("Tower: level " + std::to_string(i + 1) +
                                  " is not almost contained in level " + std::to_string(i));
    if (levels[i].almost_subset_bound(levels[i + 1]))
      throw std::invalid_argument("Tower: levels " + std::to_string(i) + " and " +
                                  std::to_string(i + 1) + " do not strictly decrease");
  }
  for (size_t i = 0; i < levels.size(); ++i) {
    if (levels[i].cardinality_class() != CardClass::InfiniteCoinfinite)
      throw std::invalid_argument("Tower: level " + std::to_string(i) +
                                  " must be infinite-coinfinite");
    params_.window_horizon = std::max(params_.window_horizon, levels[i].prefix_len());
  }
  init_params();
  levels_.push_back(TowerLevel{std::move(levels.front()), 0});
  for (size_t i = 1; i < levels.size(); ++i) {
    uint64_t bound = *levels[i].almost_subset_bound(levels_.back().set);
    levels_.push_back(TowerLevel{std::move(levels[i]), bound});
  }
}

void Tower::init_params() {
  if (x_.cardinality_class() != CardClass::InfiniteCoinfinite)
    throw std::invalid_argument("Tower: base set must be infinite-coinfinite, got " +
                                std::string(card_class_name(x_.cardinality_class())));
  if (params_.mint_modulus < 2) throw std::invalid_argument("Tower: mint_modulus must be >= 2");
  params_.window_horizon =
      std::max({params_.window_horizon, x_.prefix_len(), tail_base_.prefix_len()});
  params_.depth_cap = std::min(params_.depth_cap, params_.window_horizon);
  tail_start_ = params_.window_horizon;
  current_tail_ = build_tail(0);
}

std::vector<uint64_t> Tower::stamp_slots(uint64_t from) const {
  std::vector<uint64_t> slots;
  uint64_t n = from;
  while (slots.size() < params_.counter_bits) {
    if (!x_.member(n)) slots.push_back(n);
    ++n;
  }
  return slots;
}

// Tail pattern at thinning depth d: elements of the tail base at or beyond
// tail_start whose rank (counted from tail_start) is >= d mod mint_modulus.
UPSet Tower::build_tail(uint64_t drops) const {
  uint64_t q = tail_base_.period_len();
  uint64_t ones = 0;
  for (uint64_t i = 0; i < q; ++i)
    if (tail_base_.member(tail_start_ + i)) ++ones;
  if (ones == 0) throw std::logic_error("Tower: tail base has an empty tail");
  // ranks mod M re-align after M/gcd(ones, M) base periods
  uint64_t m = params_.mint_modulus;
  uint64_t span = q * (m / std::gcd(ones, m));
  Bits prefix(tail_start_, false);
  Bits period(span);
  uint64_t rank = 0;
  for (uint64_t i = 0; i < span; ++i) {
    if (tail_base_.member(tail_start_ + i)) {
      period[i] = (rank % m) >= drops;
      ++rank;
    }
  }
  return UPSet::from_bits(std::move(prefix), std::move(period));
}

void Tower::begin_batch() {
  if (drops_ + 1 >= params_.mint_modulus)
    throw std::length_error("Tower: mint capacity exhausted (" + std::to_string(drops_) +
                            " thinning steps); raise mint_modulus");
  ++drops_;
  current_tail_ = build_tail(drops_);
  batch_open_ = true;
}

UPSet Tower::build_level(const Bits& w) {
  if (w.size() > params_.depth_cap)
    throw std::invalid_argument("Tower: requested prefix of length " + std::to_string(w.size()) +
                                " exceeds depth cap " + std::to_string(params_.depth_cap));
  uint64_t stamp = counter_;
  auto slots = stamp_slots(w.size());
  uint64_t explicit_len =
      std::max({tail_start_, current_tail_.prefix_len(), slots.back() + 1});

  Bits prefix(explicit_len);
  size_t slot_index = 0;
  for (uint64_t n = 0; n < explicit_len; ++n) {
    if (n < w.size()) {
      prefix[n] = !w[n];
    } else if (slot_index < slots.size() && slots[slot_index] == n) {
      prefix[n] = (stamp >> slot_index) & 1;
      ++slot_index;
    } else if (x_.member(n)) {
      prefix[n] = (n < tail_start_) ? true : current_tail_.member(n);
    } else {
      prefix[n] = false;
    }
  }
  uint64_t q = current_tail_.period_len();
  Bits period(q);
  for (uint64_t i = 0; i < q; ++i) period[i] = current_tail_.member(explicit_len + i);
  return UPSet::from_bits(std::move(prefix), std::move(period));
}

size_t Tower::mint_level(const Bits& w) {
  if (!batch_open_) begin_batch();
  if (level_texts_.empty())
    for (const auto& lvl : levels_) level_texts_.insert(lvl.set.str());

  UPSet lvl;
  while (true) {
    if (counter_ + 1 >= (1ull << params_.counter_bits))
      throw std::length_error("Tower: freshness counter exhausted");
    ++counter_;
    lvl = build_level(w);
    if (level_texts_.insert(lvl.str()).second) break;  // stamp grids can collide
  }

  if (lvl.cardinality_class() != CardClass::InfiniteCoinfinite)
    throw std::runtime_error("Tower: requested prefix yields a " +
                             std::string(card_class_name(lvl.cardinality_class())) + " level");
  auto bound = lvl.almost_subset_bound(levels_.back().set);
  if (!bound) throw std::logic_error("Tower: new level escapes the previous one");
  levels_.push_back(TowerLevel{std::move(lvl), *bound});
  return levels_.size() - 1;
}

}  // namespace towerkit
