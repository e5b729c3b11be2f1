#pragma once

#include "interval.hpp"
#include "rational.hpp"

#include <vector>

namespace towerkit::decomp {

using towerkit::Interval;
using towerkit::Rational;

// Finite stand-in for a closed nowhere dense set inside (0,1): a nonempty,
// strictly increasing point list.
struct FiniteNwdSet {
  std::vector<Rational> points;

  static FiniteNwdSet of(std::vector<Rational> pts);  // validates
};

// Finite order-preserving map as a paired list sorted by first coordinate.
using OrderMap = std::vector<std::pair<Rational, Rational>>;

// Ordered list of rational-string pairs: "[(1/3,1/4),(1/2,3/4)]".
std::string order_map_str(const OrderMap& m);

// Both coordinate sequences strictly increase together.
bool check_order_iso(const OrderMap& m);

// Maximal open intervals of (0,1) disjoint from F, in increasing order:
// (0, f1), (f1, f2), ..., (fr, 1).
std::vector<Interval> max_intervals(const FiniteNwdSet& f);

// The interval map induced by an order isomorphism phi: F -> G: the k-th
// maximal interval of F goes to the k-th of G, endpoints transformed by phi
// with the sentinels 0 and 1 fixed.
std::vector<std::pair<Interval, Interval>> induced_iso(const OrderMap& phi, const FiniteNwdSet& f,
                                                       const FiniteNwdSet& g);

// Union of phi with per-interval partial isomorphisms psi[k]: I_k cap A ->
// phi_hat(I_k) cap B. Each psi[k] must stay inside its interval pair; the
// result is a strictly increasing bijection extending phi.
OrderMap assemble(const OrderMap& phi, const FiniteNwdSet& f, const FiniteNwdSet& g,
                  const std::vector<OrderMap>& psi);

}  // namespace towerkit::decomp
