#include "rational.hpp"

namespace towerkit {

std::string Rational::str() const {
  return num().str() + "/" + den().str();
}

Rational Rational::parse(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(s));
    BigInt n(s.substr(0, slash));
    BigInt d(s.substr(slash + 1));
    return Rational(n, d);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("Rational: cannot parse '" + s + "'");
  }
}

BigInt floor_mul_pow2(const Rational& x, unsigned k) {
  BigInt n = x.num() << k;
  BigInt d = x.den();
  BigInt q = n / d;
  if (q * d > n) q -= 1;  // round toward -inf
  return q;
}

Rational pow2_inv(unsigned k) {
  return Rational(BigInt(1), BigInt(1) << k);
}

std::optional<DyadicForm> as_dyadic(const Rational& x) {
  BigInt d = x.den();
  if (d == 1) {
    // integer: i/2^0, except zero which is (0,0) by convention
    return DyadicForm{x.num(), 0};
  }
  unsigned e = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++e;
  }
  if (d != 1) return std::nullopt;
  return DyadicForm{x.num(), e};
}

}  // namespace towerkit
