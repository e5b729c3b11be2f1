#include "upset.hpp"

#include <algorithm>
#include <numeric>

namespace towerkit {

namespace {

constexpr uint64_t kMaxAlignedPeriod = 1ull << 22;

uint64_t lcm_u64(uint64_t a, uint64_t b) {
  uint64_t g = std::gcd(a, b);
  uint64_t l = a / g;
  if (l > kMaxAlignedPeriod / b)
    throw std::length_error("UPSet: aligned period exceeds implementation cap");
  return l * b;
}

bool all_of_bits(const Bits& v, bool x) {
  return std::all_of(v.begin(), v.end(), [x](bool b) { return b == x; });
}

}  // namespace

const char* card_class_name(CardClass c) {
  switch (c) {
    case CardClass::Empty: return "empty";
    case CardClass::Finite: return "finite";
    case CardClass::InfiniteCoinfinite: return "infinite-coinfinite";
    case CardClass::Cofinite: return "cofinite";
    case CardClass::Full: return "full";
  }
  return "?";
}

void UPSet::canonicalize(Bits& prefix, Bits& period) {
  if (period.empty()) throw std::invalid_argument("UPSet: empty period");

  // Minimal period: primitive root of the periodic word.
  uint64_t q = period.size();
  for (uint64_t d = 1; d <= q / 2; ++d) {
    if (q % d != 0) continue;
    bool repeats = true;
    for (uint64_t i = d; i < q && repeats; ++i) repeats = (period[i] == period[i % d]);
    if (repeats) {
      period.resize(d);
      break;
    }
  }

  // Minimal prefix: absorb prefix bits that already match the rotated
  // period. A rotation of a primitive word stays primitive.
  while (!prefix.empty() && prefix.back() == period.back()) {
    period.pop_back();
    period.insert(period.begin(), prefix.back());
    prefix.pop_back();
  }
}

UPSet UPSet::from_bits(Bits prefix, Bits period) {
  canonicalize(prefix, period);
  UPSet s;
  s.prefix_ = std::move(prefix);
  s.period_ = std::move(period);
  return s;
}

UPSet UPSet::parse(const std::string& s) {
  auto bar = s.find('|');
  if (bar == std::string::npos) throw std::invalid_argument("UPSet: missing '|' in '" + s + "'");
  auto to_bits = [&](const std::string& part) {
    Bits b;
    b.reserve(part.size());
    for (char c : part) {
      if (c != '0' && c != '1') throw std::invalid_argument("UPSet: bad character in '" + s + "'");
      b.push_back(c == '1');
    }
    return b;
  };
  Bits prefix = to_bits(s.substr(0, bar));
  Bits period = to_bits(s.substr(bar + 1));
  if (period.empty()) throw std::invalid_argument("UPSet: empty period in '" + s + "'");
  return from_bits(std::move(prefix), std::move(period));
}

std::string UPSet::str() const {
  std::string out;
  out.reserve(prefix_.size() + period_.size() + 1);
  for (bool b : prefix_) out += b ? '1' : '0';
  out += '|';
  for (bool b : period_) out += b ? '1' : '0';
  return out;
}

CardClass UPSet::cardinality_class() const {
  bool tail_all_one = all_of_bits(period_, true);
  bool tail_all_zero = all_of_bits(period_, false);
  if (tail_all_zero) return all_of_bits(prefix_, false) ? CardClass::Empty : CardClass::Finite;
  if (tail_all_one) return all_of_bits(prefix_, true) ? CardClass::Full : CardClass::Cofinite;
  return CardClass::InfiniteCoinfinite;
}

std::optional<uint64_t> UPSet::max_element() const {
  auto c = cardinality_class();
  if (c == CardClass::Empty) return std::nullopt;
  if (c != CardClass::Finite) throw std::logic_error("UPSet: max_element of an infinite set");
  for (uint64_t i = prefix_.size(); i-- > 0;)
    if (prefix_[i]) return i;
  return std::nullopt;  // unreachable: finite nonempty has a prefix one
}

std::optional<uint64_t> UPSet::min_element() const {
  return min_element_from(0);
}

std::optional<uint64_t> UPSet::min_element_from(uint64_t from) const {
  for (uint64_t i = from; i < prefix_.size(); ++i)
    if (prefix_[i]) return i;
  uint64_t start = std::max<uint64_t>(from, prefix_.size());
  for (uint64_t i = start; i < start + period_.size(); ++i)
    if (member(i)) return i;
  return std::nullopt;
}

template <typename F>
UPSet pointwise(const UPSet& a, const UPSet& b, F&& f) {
  uint64_t p = std::max(a.prefix_len(), b.prefix_len());
  uint64_t q = lcm_u64(a.period_len(), b.period_len());
  Bits prefix(p), period(q);
  for (uint64_t i = 0; i < p; ++i) prefix[i] = f(a.member(i), b.member(i));
  for (uint64_t i = 0; i < q; ++i) period[i] = f(a.member(p + i), b.member(p + i));
  return UPSet::from_bits(std::move(prefix), std::move(period));
}

UPSet UPSet::complement() const {
  Bits prefix = prefix_, period = period_;
  prefix.flip();
  period.flip();
  return from_bits(std::move(prefix), std::move(period));
}

UPSet set_intersect(const UPSet& a, const UPSet& b) {
  return pointwise(a, b, [](bool x, bool y) { return x && y; });
}

UPSet set_union(const UPSet& a, const UPSet& b) {
  return pointwise(a, b, [](bool x, bool y) { return x || y; });
}

UPSet set_difference(const UPSet& a, const UPSet& b) {
  return pointwise(a, b, [](bool x, bool y) { return x && !y; });
}

std::optional<uint64_t> UPSet::almost_subset_bound(const UPSet& t) const {
  UPSet d = set_difference(*this, t);
  auto c = d.cardinality_class();
  if (c == CardClass::Empty) return 0;
  if (c != CardClass::Finite) return std::nullopt;
  return *d.max_element() + 1;
}

std::optional<uint64_t> UPSet::almost_disjoint_bound(const UPSet& t) const {
  UPSet i = set_intersect(*this, t);
  auto c = i.cardinality_class();
  if (c == CardClass::Empty) return 0;
  if (c != CardClass::Finite) return std::nullopt;
  return *i.max_element() + 1;
}

}  // namespace towerkit
