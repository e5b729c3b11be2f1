#pragma once

#include "cantor.hpp"
#include "condition.hpp"
#include "registry.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace towerkit::containment {

using cantor::GoodInterval;
using poset::Condition;
using poset::PointView;
using poset::Registry;

// Machine-checkable witness that a condition forces the image of every
// level-n good interval into a level-l good interval. Entry i covers the
// i-th good-at-n interval; the final entry uses the sentinel 1 as its right
// flank, and its target is the rightmost good-at-l interval.
struct CertEntry {
  uint64_t t_index = 0;
  size_t a0 = 0;
  std::optional<size_t> a1;  // absent on the final entry
  BigInt s_index = 0;        // good-at-l index; l runs past word width quickly
  size_t b0 = 0;
  std::optional<size_t> b1;
};

struct Certificate {
  uint64_t k = 0;  // requested floor
  uint64_t n = 0;  // clear level, in X \ k
  uint64_t l = 0;  // target level, in X \ n
  std::vector<CertEntry> entries;
};

struct CheckResult {
  bool ok = true;
  std::string reason;
};

struct RunCaps {
  uint64_t search_cap = 64;
  uint64_t level_cap = 60;
};

// Least n in X with k <= n <= search_cap such that no domain value of p sits
// in a good-at-n interval. Throws with the intersection-set diagnostic when
// the cap is exhausted.
uint64_t find_clear_level(const Condition& p, const Registry& reg, uint64_t k,
                          uint64_t search_cap);

// Fresh flanking a-points around every good-at-n interval: a0 below, a1
// above, interleaved between consecutive intervals; the final interval gets
// only a0 (its right flank is the sentinel). Mints one thinning batch.
std::vector<std::pair<size_t, std::optional<size_t>>> flank_points(const Condition& p, uint64_t n,
                                                                   Registry& reg);

// Uniform target level l in X beyond n, and one good-at-l interval per
// good-at-n interval, placed inside the equal-partition pieces of each image
// gap; the final target is the rightmost good-at-l interval.
std::pair<uint64_t, std::vector<GoodInterval>> choose_targets(const Condition& p,
                                                              const Registry& reg, uint64_t n,
                                                              uint64_t level_cap);

struct ForceOk {
  Condition q;
  Certificate cert;
};
using ForceResult = std::variant<ForceOk, std::string>;

// The full extension: clear level, flanks, targets, then one dense-mapping
// extension per flank. On any failure the input condition is left untouched
// and the diagnostic is returned instead.
ForceResult force_containment(const Condition& p, uint64_t k, Registry& reg, RunCaps caps = {});

// Exact re-verification of a certificate against a condition: levels in X,
// flanks straddle their intervals, certified pairs present, images inside
// the target interiors, targets increasing and good at l, and q a valid
// condition. Never throws; failures carry a reason.
CheckResult check_certificate(const Condition& q, const Certificate& cert, const PointView& points,
                              const UPSet& x);

// Set-level view of the points referenced by a condition; implemented by
// the live registry and by deserialized reports.
class CombinatorialView {
 public:
  virtual ~CombinatorialView() = default;
  virtual UPSet a_level_set(size_t a_id) const = 0;  // tower level behind the point
  virtual size_t a_level_index(size_t a_id) const = 0;
  virtual UPSet b_set(size_t b_id) const = 0;
  virtual const UPSet& base() const = 0;
};

class RegistryCombView final : public CombinatorialView {
 public:
  explicit RegistryCombView(const Registry& reg) : reg_(reg) {}
  UPSet a_level_set(size_t a_id) const override { return reg_.a_set(a_id); }
  size_t a_level_index(size_t a_id) const override { return reg_.a(a_id).level; }
  UPSet b_set(size_t b_id) const override { return reg_.b(b_id).set; }
  const UPSet& base() const override { return reg_.base(); }

 private:
  const Registry& reg_;
};

// The map induced by a condition on the combinatorial side: the complement
// of each domain point's level, paired with the image point's set.
std::vector<std::pair<UPSet, UPSet>> induced_map(const Condition& q, const CombinatorialView& v);

// {n in X, n < horizon : for every (Y, Z) in f, n in Y implies some m >= n
// lies in X and Z}. Requires every Z almost disjoint from X.
std::vector<uint64_t> little_xinf(const std::vector<std::pair<UPSet, UPSet>>& f, const UPSet& x,
                                  uint64_t horizon);

struct InvariantRow {
  uint64_t n = 0;
  size_t a_id = 0;
  size_t level = 0;
  bool in_level = false;
  uint64_t k_bound = 0;
  bool ok = false;
};

struct InvariantReport {
  std::vector<InvariantRow> rows;
  bool pass = true;
};

// For every witnessed n and every tower level with a point in dom(q):
// either n lies in the level, or n is at most the almost-disjointness bound
// of the image against the base set.
InvariantReport little_invariant_check(const std::vector<uint64_t>& witnessed,
                                       const std::vector<poset::PairEntry>& pairs,
                                       const CombinatorialView& v);
InvariantReport little_invariant_check(const std::vector<uint64_t>& witnessed, const Condition& q,
                                       const Registry& reg);

}  // namespace towerkit::containment
