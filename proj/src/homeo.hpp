#pragma once

#include "containment.hpp"
#include "registry.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace towerkit::homeo {

using poset::Registry;
using towerkit::Bits;
using towerkit::UPSet;

// Finitely many colour classes; a-points are coloured by tower level,
// b-points carry the colour they were minted with.
struct Coloring {
  int classes = 1;
  int a_color(size_t level) const { return static_cast<int>(level % static_cast<size_t>(classes)); }
};

// Condition of the cylinder-homeomorphism forcing: a finite colour-
// preserving injection between point registries plus a permutation of the
// level-n bit strings that the injection respects prefix-wise.
struct HomeoCondition {
  std::vector<std::pair<size_t, size_t>> f;  // a-point id -> b-point id
  std::vector<uint32_t> pi;                  // image table over 2^level indices
  uint64_t level = 0;

  static HomeoCondition minimal() { return HomeoCondition{{}, {0}, 0}; }
  bool dom_contains(size_t a_id) const;
};

struct CheckResult {
  bool ok = true;
  std::string reason;
};

// First n bits of a set's characteristic sequence, packed as an index
// (position 0 is the most significant bit).
uint32_t prefix_index(const UPSet& s, uint64_t n);

// All four condition clauses: injectivity, colour preservation, pi a
// permutation, and f respecting pi at the condition's level.
CheckResult validate(const HomeoCondition& p, const Coloring& col, const Registry& reg);

// p extends q: finer level, f_p contains f_q, and pi_p refines pi_q
// fiberwise.
bool extends(const HomeoCondition& p, const HomeoCondition& q);

// Raise the level until all domain points have pairwise distinct prefixes
// and all range points likewise; pi grows fiberwise by identity except
// where f dictates.
HomeoCondition separate(const HomeoCondition& p, const Registry& reg);

struct FixCertificate {
  uint64_t n = 0;
  uint64_t level = 0;  // pi table level of the certified condition
};

struct FixOk {
  HomeoCondition q;
  FixCertificate cert;
};
using FixResult = std::variant<FixOk, std::string>;

// Find the least n in X beyond k avoided by every mapped point, then extend
// pi to level n+1 preserving bit n fiberwise; middle bits move by the
// transposition the (at most one, after separation) f-constraint demands.
FixResult fix_bit_extend(const HomeoCondition& p, uint64_t k, Registry& reg,
                         uint64_t search_cap = 64);

// Verify pi maps the bit-n classes of level-n_q strings onto themselves;
// any homeomorphism extending q then fixes the cylinder at n setwise.
// Throws when n+1 exceeds the condition's level.
CheckResult check_fix_certificate(const HomeoCondition& q, uint64_t n);

// Domain density: after separation, mint a same-coloured b-point whose
// prefix is pi applied to a's prefix, and add the pair.
HomeoCondition add_point(const HomeoCondition& p, size_t a_id, const Coloring& col, Registry& reg);

// First position where two distinct sets differ.
uint64_t first_difference(const UPSet& a, const UPSet& b);

}  // namespace towerkit::homeo
