#include "aniso/checked_int.hpp"
#include "aniso/rational.hpp"

#include <algorithm>
#include <ostream>

namespace aniso {

std::string Int::str() const {
  if (v_ == 0) return "0";
  bool neg = v_ < 0;
  // work on the negative side so the minimum value prints correctly
  Raw x = neg ? v_ : -v_;
  std::string out;
  while (x != 0) {
    out.push_back(static_cast<char>('0' - static_cast<int>(x % 10)));
    x /= 10;
  }
  if (neg) out.push_back('-');
  std::reverse(out.begin(), out.end());
  return out;
}

Int abs(Int a) { return a < 0 ? -a : a; }

Int floorDiv(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) q -= 1;
  return q;
}

Int floorMod(Int a, Int b) { return a - floorDiv(a, b) * b; }

Int gcd(Int a, Int b) {
  a = abs(a);
  b = abs(b);
  while (b != 0) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Int lcm(Int a, Int b) {
  if (a == 0 || b == 0) return 0;
  return abs(a / gcd(a, b) * b);
}

Int pow(Int base, unsigned exp) {
  Int r = 1;
  while (exp != 0) {
    if (exp & 1U) r *= base;
    exp >>= 1U;
    if (exp != 0) base *= base;
  }
  return r;
}

ExtendedGcd extendedGcd(Int a, Int b) {
  Int old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    Int q = old_r / r;
    Int tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

std::ostream& operator<<(std::ostream& os, Int v) { return os << v.str(); }

// --- Rational ---

Rational::Rational(Int num, Int den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  Int g = gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  num_ = num;
  den_ = den;
}

Rational Rational::inverse() const {
  if (num_ == 0) throw std::domain_error("inverse of zero rational");
  return {den_, num_};
}

Rational& Rational::operator+=(const Rational& o) {
  Int g = gcd(den_, o.den_);
  Int d1 = den_ / g;
  *this = Rational(num_ * (o.den_ / g) + o.num_ * d1, d1 * o.den_);
  return *this;
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
  // cross-cancel first to keep intermediates small
  Int g1 = gcd(num_, o.den_);
  Int g2 = gcd(o.num_, den_);
  if (g1 == 0) g1 = 1;
  if (g2 == 0) g2 = 1;
  *this = Rational((num_ / g1) * (o.num_ / g2), (den_ / g2) * (o.den_ / g1));
  return *this;
}

Rational& Rational::operator/=(const Rational& o) { return *this *= o.inverse(); }

std::string Rational::str() const {
  if (den_ == 1) return num_.str();
  return num_.str() + "/" + den_.str();
}

Rational abs(const Rational& r) { return r < Rational(0) ? -r : r; }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace aniso
