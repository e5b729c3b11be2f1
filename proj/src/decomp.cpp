#include "decomp.hpp"

#include <algorithm>

namespace towerkit::decomp {

FiniteNwdSet FiniteNwdSet::of(std::vector<Rational> pts) {
  if (pts.empty()) throw std::invalid_argument("FiniteNwdSet: needs at least one point");
  for (size_t i = 0; i < pts.size(); ++i) {
    if (!(Rational(0) < pts[i] && pts[i] < Rational(1)))
      throw std::invalid_argument("FiniteNwdSet: points must lie in (0,1)");
    if (i > 0 && !(pts[i - 1] < pts[i]))
      throw std::invalid_argument("FiniteNwdSet: points must strictly increase");
  }
  return FiniteNwdSet{std::move(pts)};
}

std::string order_map_str(const OrderMap& m) {
  std::string out = "[";
  for (size_t i = 0; i < m.size(); ++i) {
    if (i) out += ',';
    out += "(" + m[i].first.str() + "," + m[i].second.str() + ")";
  }
  return out + "]";
}

bool check_order_iso(const OrderMap& m) {
  for (size_t i = 0; i + 1 < m.size(); ++i) {
    if (!(m[i].first < m[i + 1].first)) return false;
    if (!(m[i].second < m[i + 1].second)) return false;
  }
  return true;
}

std::vector<Interval> max_intervals(const FiniteNwdSet& f) {
  std::vector<Interval> out;
  out.reserve(f.points.size() + 1);
  Rational left(0);
  for (const auto& p : f.points) {
    out.push_back(Interval::open(left, p));
    left = p;
  }
  out.push_back(Interval::open(left, Rational(1)));
  return out;
}

std::vector<std::pair<Interval, Interval>> induced_iso(const OrderMap& phi, const FiniteNwdSet& f,
                                                       const FiniteNwdSet& g) {
  if (f.points.size() != g.points.size())
    throw std::invalid_argument("induced_iso: point sets differ in size");
  if (phi.size() != f.points.size())
    throw std::invalid_argument("induced_iso: phi does not cover F");
  for (size_t i = 0; i < phi.size(); ++i) {
    if (phi[i].first != f.points[i] || phi[i].second != g.points[i])
      throw std::invalid_argument("induced_iso: phi is not the order isomorphism F -> G");
  }
  if (!check_order_iso(phi)) throw std::invalid_argument("induced_iso: phi not order preserving");

  auto mf = max_intervals(f);
  auto mg = max_intervals(g);
  std::vector<std::pair<Interval, Interval>> out;
  out.reserve(mf.size());
  for (size_t k = 0; k < mf.size(); ++k) out.emplace_back(mf[k], mg[k]);
  return out;
}

OrderMap assemble(const OrderMap& phi, const FiniteNwdSet& f, const FiniteNwdSet& g,
                  const std::vector<OrderMap>& psi) {
  auto pairs = induced_iso(phi, f, g);
  if (psi.size() != pairs.size())
    throw std::invalid_argument("assemble: expected one psi per maximal interval");

  OrderMap total;
  for (size_t k = 0; k < psi.size(); ++k) {
    const auto& [dom_iv, rng_iv] = pairs[k];
    for (const auto& [a, b] : psi[k]) {
      if (!dom_iv.contains(a))
        throw std::invalid_argument("assemble: psi[" + std::to_string(k) +
                                    "] has a domain point outside " + dom_iv.str());
      if (!rng_iv.contains(b))
        throw std::invalid_argument("assemble: psi[" + std::to_string(k) +
                                    "] has a range point outside " + rng_iv.str());
    }
    if (!check_order_iso(psi[k]))
      throw std::invalid_argument("assemble: psi[" + std::to_string(k) + "] not order preserving");
  }

  // stitch in order: psi_0, phi_0, psi_1, phi_1, ..., psi_r
  for (size_t k = 0; k < psi.size(); ++k) {
    total.insert(total.end(), psi[k].begin(), psi[k].end());
    if (k < phi.size()) total.push_back(phi[k]);
  }
  if (!check_order_iso(total)) throw std::logic_error("assemble: result not order preserving");
  return total;
}

}  // namespace towerkit::decomp
