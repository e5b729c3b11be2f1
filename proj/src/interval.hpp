#pragma once

#include "rational.hpp"

#include <string>
#include <vector>

namespace towerkit {

// Interval with per-end closedness flags. Emptiness is unrepresentable:
// requires lo < hi, or lo == hi with both ends closed (a singleton).
class Interval {
 public:
  Interval(Rational lo, Rational hi, bool lo_closed, bool hi_closed);

  static Interval open(Rational lo, Rational hi) { return Interval(lo, hi, false, false); }
  static Interval closed(Rational lo, Rational hi) { return Interval(lo, hi, true, true); }

  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  bool lo_closed() const { return lo_closed_; }
  bool hi_closed() const { return hi_closed_; }
  bool is_open() const { return !lo_closed_ && !hi_closed_; }

  Rational length() const { return hi_ - lo_; }

  bool contains(const Rational& x) const;

  // "[lo,hi]", "(lo,hi)", "[lo,hi)", "(lo,hi]" with canonical rational text.
  std::string str() const;

  friend bool operator==(const Interval& a, const Interval& b) {
    return a.lo_ == b.lo_ && a.hi_ == b.hi_ && a.lo_closed_ == b.lo_closed_ &&
           a.hi_closed_ == b.hi_closed_;
  }

 private:
  Rational lo_, hi_;
  bool lo_closed_, hi_closed_;
};

// Every point of I lies in J, decided by endpoint comparison and closedness.
bool interval_subset(const Interval& i, const Interval& j);

// Split an open interval into j equal open pieces, in increasing order.
// The closures of the pieces tile the closure of I.
std::vector<Interval> equal_partition(const Interval& i, uint64_t j);

}  // namespace towerkit
