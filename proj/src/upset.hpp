#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace towerkit {

using Bits = std::vector<bool>;

enum class CardClass { Empty, Finite, InfiniteCoinfinite, Cofinite, Full };

const char* card_class_name(CardClass c);

// Ultimately periodic subset of the naturals: bit(n) = prefix[n] for n < p,
// else period[(n - p) mod q]. Stored in canonical form (minimal period
// length, then minimal prefix length), so denotational equality is
// structural equality. Immutable after construction.
class UPSet {
 public:
  // Empty set: prefix "", period "0".
  UPSet() : period_(1, false) {}

  static UPSet from_bits(Bits prefix, Bits period);

  // Text form "prefix|period" over {0,1}, e.g. "101|10".
  static UPSet parse(const std::string& s);
  std::string str() const;

  const Bits& prefix() const { return prefix_; }
  const Bits& period() const { return period_; }
  uint64_t prefix_len() const { return prefix_.size(); }
  uint64_t period_len() const { return period_.size(); }

  bool member(uint64_t n) const {
    if (n < prefix_.size()) return prefix_[n];
    return period_[(n - prefix_.size()) % period_.size()];
  }

  CardClass cardinality_class() const;
  bool is_infinite() const {
    auto c = cardinality_class();
    return c == CardClass::InfiniteCoinfinite || c == CardClass::Cofinite || c == CardClass::Full;
  }
  bool is_coinfinite() const {
    auto c = cardinality_class();
    return c == CardClass::InfiniteCoinfinite || c == CardClass::Finite || c == CardClass::Empty;
  }

  // Largest element of a finite set; nullopt for the empty set.
  // Throws if the set is infinite.
  std::optional<uint64_t> max_element() const;

  // Least element; nullopt for the empty set.
  std::optional<uint64_t> min_element() const;

  // Least element >= from; nullopt if none (finite sets only).
  std::optional<uint64_t> min_element_from(uint64_t from) const;

  UPSet complement() const;
  friend UPSet set_intersect(const UPSet& a, const UPSet& b);
  friend UPSet set_union(const UPSet& a, const UPSet& b);
  friend UPSet set_difference(const UPSet& a, const UPSet& b);

  // Least k with (*this) \ k contained in t, when the containment holds
  // modulo a finite set; nullopt otherwise.
  std::optional<uint64_t> almost_subset_bound(const UPSet& t) const;

  // Least k with (*this) intersect t contained in [0, k); nullopt when the
  // intersection is infinite.
  std::optional<uint64_t> almost_disjoint_bound(const UPSet& t) const;

  friend bool operator==(const UPSet& a, const UPSet& b) {
    return a.prefix_ == b.prefix_ && a.period_ == b.period_;
  }
  friend bool operator!=(const UPSet& a, const UPSet& b) { return !(a == b); }

 private:
  Bits prefix_;
  Bits period_;  // nonempty

  static void canonicalize(Bits& prefix, Bits& period);
  template <typename F>
  friend UPSet pointwise(const UPSet& a, const UPSet& b, F&& f);
};

}  // namespace towerkit
