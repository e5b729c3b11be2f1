#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace towerkit {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational in canonical form: den > 0, gcd(|num|, den) = 1.
// Canonicalization is delegated to boost's rational adaptor; construction
// from (kp, kq) and (p, q) yields equal values with equal representation.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long long n) : v_(n) {}
  Rational(const BigInt& n) : v_(n) {}
  Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    v_ = (den < 0) ? Q(-num, -den) : Q(num, den);
  }
  Rational(long long num, long long den) : Rational(BigInt(num), BigInt(den)) {}

  BigInt num() const { return boost::multiprecision::numerator(v_); }
  BigInt den() const { return boost::multiprecision::denominator(v_); }

  // Canonical text form "num/den", e.g. "3/8", "-1/2", "0/1".
  std::string str() const;
  static Rational parse(const std::string& s);

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(a.v_ + b.v_); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(a.v_ - b.v_); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(a.v_ * b.v_); }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.v_ == 0) throw std::domain_error("Rational: division by zero");
    return Rational(a.v_ / b.v_);
  }
  Rational operator-() const { return Rational(-v_); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  int sign() const { return v_ < 0 ? -1 : (v_ > 0 ? 1 : 0); }

 private:
  using Q = boost::multiprecision::cpp_rational;
  explicit Rational(const Q& q) : v_(q) {}
  Q v_;
};

enum class Order { Less, Equal, Greater };

inline Order rat_compare(const Rational& a, const Rational& b) {
  if (a < b) return Order::Less;
  if (b < a) return Order::Greater;
  return Order::Equal;
}

// floor(x * 2^k), exact.
BigInt floor_mul_pow2(const Rational& x, unsigned k);

// 2^-k as a rational.
Rational pow2_inv(unsigned k);

// i / 2^e in lowest terms when den is a power of two; nullopt otherwise.
// Zero reports (0, 0).
struct DyadicForm {
  BigInt i;
  unsigned e;
};
std::optional<DyadicForm> as_dyadic(const Rational& x);

}  // namespace towerkit
