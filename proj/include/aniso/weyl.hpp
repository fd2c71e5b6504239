#pragma once

#include "aniso/finite_field.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace aniso {

/// Polynomial in the central variables x, y over F_p; keys are (deg_x, deg_y).
class CentralPoly {
 public:
  using Monomial = std::pair<unsigned, unsigned>;

  CentralPoly() = default;
  CentralPoly(unsigned p, std::int64_t c);
  static CentralPoly monomial(unsigned p, unsigned dx, unsigned dy, unsigned c = 1);

  [[nodiscard]] unsigned prime() const { return p_; }
  [[nodiscard]] bool isZero() const { return terms_.empty(); }
  [[nodiscard]] bool isConstant() const;
  [[nodiscard]] unsigned constantTerm() const;
  [[nodiscard]] const std::map<Monomial, unsigned>& terms() const { return terms_; }
  [[nodiscard]] std::string str() const;

  CentralPoly& operator+=(const CentralPoly& o);
  CentralPoly& operator-=(const CentralPoly& o);
  friend CentralPoly operator+(CentralPoly a, const CentralPoly& b) { return a += b; }
  friend CentralPoly operator-(CentralPoly a, const CentralPoly& b) { return a -= b; }
  friend CentralPoly operator*(const CentralPoly& a, const CentralPoly& b);
  friend bool operator==(const CentralPoly&, const CentralPoly&) = default;

 private:
  void add(const Monomial& m, std::int64_t c);
  unsigned p_ = 2;
  std::map<Monomial, unsigned> terms_;
};

/// Element of the algebra over F_p[x, y] generated by u, v with
/// v^p = x, u^p = y, vu - uv = 1, stored in the basis u^i v^j, 0 <= i, j < p.
class WeylElement {
 public:
  using Monomial = std::pair<unsigned, unsigned>;  // (i, j) for u^i v^j

  explicit WeylElement(unsigned p);
  static WeylElement scalar(const CentralPoly& c);
  static WeylElement u(unsigned p);
  static WeylElement v(unsigned p);
  /// c * u^i v^j with i, j < p.
  static WeylElement basis(unsigned p, unsigned i, unsigned j, const CentralPoly& c);

  [[nodiscard]] unsigned prime() const { return p_; }
  [[nodiscard]] bool isZero() const { return terms_.empty(); }
  [[nodiscard]] const std::map<Monomial, CentralPoly>& terms() const { return terms_; }
  [[nodiscard]] CentralPoly coefficient(unsigned i, unsigned j) const;
  [[nodiscard]] std::string str() const;

  WeylElement& operator+=(const WeylElement& o);
  WeylElement& operator-=(const WeylElement& o);
  friend WeylElement operator+(WeylElement a, const WeylElement& b) { return a += b; }
  friend WeylElement operator-(WeylElement a, const WeylElement& b) { return a -= b; }
  friend WeylElement operator*(const WeylElement& a, const WeylElement& b);
  friend bool operator==(const WeylElement&, const WeylElement&) = default;

 private:
  void addTerm(const Monomial& m, const CentralPoly& c);
  unsigned p_;
  std::map<Monomial, CentralPoly> terms_;
};

WeylElement pow(const WeylElement& a, unsigned e);
WeylElement commutator(const WeylElement& a, const WeylElement& b);

/// Parses and normalises an expression in u, v, x, y, integers, + - * ^ and
/// parentheses; juxtaposition multiplies ("vu", "2uv^2").
WeylElement weylNormalForm(std::string_view expr, unsigned p);

struct WeylIdentityReport {
  unsigned p = 0;
  WeylElement difference{2};  // (uv)^p - uv - u^p v^p
  [[nodiscard]] bool holds() const { return difference.isZero(); }
};

WeylIdentityReport weylIdentityCheck(unsigned p);

struct AdSolveReport {
  unsigned p = 0;
  std::vector<std::vector<unsigned>> adMatrix;  // ad v on the basis u^i v^j, index i*p + j
  unsigned nilpotencyIndex = 0;                  // least k with (ad v)^k = 0
  WeylElement preimage{2};                        // [v, preimage] = 1
  bool verified = false;
};

/// Solves [v, w] = 1 and certifies (ad v)^p = 0.
AdSolveReport adSolve(unsigned p);

}  // namespace aniso
