#include "interval.hpp"

namespace towerkit {

Interval::Interval(Rational lo, Rational hi, bool lo_closed, bool hi_closed)
    : lo_(std::move(lo)), hi_(std::move(hi)), lo_closed_(lo_closed), hi_closed_(hi_closed) {
  if (lo_ > hi_ || (lo_ == hi_ && !(lo_closed_ && hi_closed_)))
    throw std::invalid_argument("Interval: empty or reversed (" + lo_.str() + ", " + hi_.str() +
                                ")");
}

bool Interval::contains(const Rational& x) const {
  if (x < lo_ || (x == lo_ && !lo_closed_)) return false;
  if (x > hi_ || (x == hi_ && !hi_closed_)) return false;
  return true;
}

std::string Interval::str() const {
  std::string s;
  s += lo_closed_ ? '[' : '(';
  s += lo_.str();
  s += ',';
  s += hi_.str();
  s += hi_closed_ ? ']' : ')';
  return s;
}

bool interval_subset(const Interval& i, const Interval& j) {
  // left end: j must extend at least as far left, with compatible closedness
  if (i.lo() < j.lo()) return false;
  if (i.lo() == j.lo() && i.lo_closed() && !j.lo_closed()) return false;
  if (i.hi() > j.hi()) return false;
  if (i.hi() == j.hi() && i.hi_closed() && !j.hi_closed()) return false;
  return true;
}

std::vector<Interval> equal_partition(const Interval& i, uint64_t j) {
  if (!i.is_open()) throw std::invalid_argument("equal_partition: interval must be open");
  if (j < 1) throw std::invalid_argument("equal_partition: j must be >= 1");
  Rational w = i.length() / Rational(BigInt(j));
  std::vector<Interval> out;
  out.reserve(j);
  Rational left = i.lo();
  for (uint64_t m = 0; m < j; ++m) {
    Rational right = (m + 1 == j) ? i.hi() : left + w;
    out.push_back(Interval::open(left, right));
    left = right;
  }
  return out;
}

}  // namespace towerkit
