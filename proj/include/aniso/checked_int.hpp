#pragma once

#include <Eigen/Core>

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <limits>
#include <stdexcept>
#include <string>

namespace aniso {

/// Raised whenever an exact integer computation leaves the 128-bit range.
class OverflowError : public std::overflow_error {
 public:
  explicit OverflowError(const std::string& what) : std::overflow_error(what) {}
};

/// Signed 128-bit integer whose arithmetic traps on overflow instead of
/// wrapping. Used as the Eigen scalar for every matrix over Z.
class Int {
 public:
  using Raw = __int128;

  constexpr Int() = default;
  constexpr Int(int v) : v_(v) {}                 // NOLINT(google-explicit-constructor)
  constexpr Int(long v) : v_(v) {}                // NOLINT(google-explicit-constructor)
  constexpr Int(long long v) : v_(v) {}           // NOLINT(google-explicit-constructor)
  constexpr Int(unsigned v) : v_(v) {}            // NOLINT(google-explicit-constructor)
  constexpr Int(unsigned long v) : v_(v) {}       // NOLINT(google-explicit-constructor)
  constexpr Int(unsigned long long v) : v_(v) {}  // NOLINT(google-explicit-constructor)

  static constexpr Int fromRaw(Raw v) {
    Int r;
    r.v_ = v;
    return r;
  }

  [[nodiscard]] constexpr Raw raw() const { return v_; }
  [[nodiscard]] bool fitsInt64() const {
    return v_ >= std::numeric_limits<std::int64_t>::min() &&
           v_ <= std::numeric_limits<std::int64_t>::max();
  }
  [[nodiscard]] std::int64_t toInt64() const {
    if (!fitsInt64()) throw OverflowError("integer does not fit in 64 bits");
    return static_cast<std::int64_t>(v_);
  }
  [[nodiscard]] std::string str() const;

  constexpr explicit operator bool() const { return v_ != 0; }

  Int& operator+=(Int o) {
    if (__builtin_add_overflow(v_, o.v_, &v_)) throw OverflowError("128-bit overflow in addition");
    return *this;
  }
  Int& operator-=(Int o) {
    if (__builtin_sub_overflow(v_, o.v_, &v_)) throw OverflowError("128-bit overflow in subtraction");
    return *this;
  }
  Int& operator*=(Int o) {
    if (__builtin_mul_overflow(v_, o.v_, &v_)) throw OverflowError("128-bit overflow in multiplication");
    return *this;
  }
  /// Truncating division, as for built-in integers.
  Int& operator/=(Int o) {
    if (o.v_ == 0) throw std::domain_error("integer division by zero");
    if (o.v_ == -1) return *this = -*this;
    v_ /= o.v_;
    return *this;
  }
  Int& operator%=(Int o) {
    if (o.v_ == 0) throw std::domain_error("integer division by zero");
    if (o.v_ == -1) {
      v_ = 0;
      return *this;
    }
    v_ %= o.v_;
    return *this;
  }

  friend Int operator+(Int a, Int b) { return a += b; }
  friend Int operator-(Int a, Int b) { return a -= b; }
  friend Int operator*(Int a, Int b) { return a *= b; }
  friend Int operator/(Int a, Int b) { return a /= b; }
  friend Int operator%(Int a, Int b) { return a %= b; }
  Int operator-() const {
    if (v_ == std::numeric_limits<Raw>::min()) throw OverflowError("128-bit overflow in negation");
    return fromRaw(-v_);
  }
  Int operator+() const { return *this; }

  friend constexpr bool operator==(Int a, Int b) { return a.v_ == b.v_; }
  friend constexpr std::strong_ordering operator<=>(Int a, Int b) { return a.v_ <=> b.v_; }

 private:
  Raw v_ = 0;
};

Int abs(Int a);
/// Floor division and the matching non-negative remainder (for b > 0).
Int floorDiv(Int a, Int b);
Int floorMod(Int a, Int b);
Int gcd(Int a, Int b);
Int lcm(Int a, Int b);
Int pow(Int base, unsigned exp);

struct ExtendedGcd {
  Int g, x, y;  // g = x*a + y*b, g >= 0
};
ExtendedGcd extendedGcd(Int a, Int b);

std::ostream& operator<<(std::ostream& os, Int v);

}  // namespace aniso

template <>
struct std::hash<aniso::Int> {
  std::size_t operator()(aniso::Int v) const noexcept {
    auto u = static_cast<unsigned __int128>(v.raw());
    return std::hash<std::uint64_t>{}(static_cast<std::uint64_t>(u) ^
                                      (static_cast<std::uint64_t>(u >> 64) * 0x9e3779b97f4a7c15ULL));
  }
};

namespace Eigen {
template <>
struct NumTraits<aniso::Int> : GenericNumTraits<aniso::Int> {
  using Real = aniso::Int;
  using NonInteger = aniso::Int;
  using Literal = aniso::Int;
  using Nested = aniso::Int;
  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 1,
    RequireInitialization = 0,
    ReadCost = 1,
    AddCost = 2,
    MulCost = 3
  };
  static inline aniso::Int epsilon() { return 0; }
  static inline aniso::Int dummy_precision() { return 0; }
  static inline aniso::Int highest() { return aniso::Int::fromRaw(std::numeric_limits<__int128>::max()); }
  static inline aniso::Int lowest() { return aniso::Int::fromRaw(std::numeric_limits<__int128>::min()); }
  static inline int digits10() { return 38; }
};
}  // namespace Eigen
