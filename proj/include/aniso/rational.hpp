#pragma once

#include "aniso/checked_int.hpp"

#include <Eigen/Core>

#include <compare>
#include <iosfwd>
#include <string>

namespace aniso {

/// Exact rational number with a positive, coprime denominator.
class Rational {
 public:
  Rational() = default;
  Rational(Int num) : num_(num) {}  // NOLINT(google-explicit-constructor)
  Rational(int num) : num_(num) {}  // NOLINT(google-explicit-constructor)
  Rational(long num) : num_(num) {}  // NOLINT(google-explicit-constructor)
  Rational(long long num) : num_(num) {}  // NOLINT(google-explicit-constructor)
  Rational(Int num, Int den);

  [[nodiscard]] Int num() const { return num_; }
  [[nodiscard]] Int den() const { return den_; }
  [[nodiscard]] bool isInteger() const { return den_ == 1; }
  [[nodiscard]] bool isZero() const { return num_ == 0; }
  [[nodiscard]] Rational inverse() const;
  [[nodiscard]] std::string str() const;

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const { return {-num_, den_}; }
  Rational operator+() const { return *this; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ <=> b.num_ * a.den_;
  }

 private:
  Int num_ = 0;
  Int den_ = 1;
};

Rational abs(const Rational& r);
std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace aniso

namespace Eigen {
template <>
struct NumTraits<aniso::Rational> : GenericNumTraits<aniso::Rational> {
  using Real = aniso::Rational;
  using NonInteger = aniso::Rational;
  using Literal = aniso::Rational;
  using Nested = aniso::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 2,
    AddCost = 8,
    MulCost = 8
  };
  static inline aniso::Rational epsilon() { return 0; }
  static inline aniso::Rational dummy_precision() { return 0; }
  static inline aniso::Rational highest() { return NumTraits<aniso::Int>::highest(); }
  static inline aniso::Rational lowest() { return NumTraits<aniso::Int>::lowest(); }
  static inline int digits10() { return 38; }
};
}  // namespace Eigen
