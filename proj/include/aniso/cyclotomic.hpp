#pragma once

#include "aniso/rational.hpp"

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace aniso {

/// Q(zeta_N) = Q[z]/Phi_N(z), N <= 24. Elements are coordinate vectors in
/// the basis 1, z, ..., z^(phi(N)-1).
class CyclotomicField {
 public:
  using Element = std::vector<Rational>;

  explicit CyclotomicField(unsigned conductor);

  [[nodiscard]] unsigned conductor() const { return n_; }
  [[nodiscard]] std::size_t degree() const { return modulus_.size() - 1; }
  [[nodiscard]] const std::vector<Rational>& modulus() const { return modulus_; }

  [[nodiscard]] Element zero() const { return Element(degree(), Rational(0)); }
  [[nodiscard]] Element one() const { return fromRational(1); }
  [[nodiscard]] Element fromRational(const Rational& r) const;
  /// Reduces an arbitrary polynomial in z (constant term first).
  [[nodiscard]] Element fromPoly(std::vector<Rational> poly) const;
  /// zeta^k.
  [[nodiscard]] Element zeta(unsigned k = 1) const;

  [[nodiscard]] Element add(const Element& a, const Element& b) const;
  [[nodiscard]] Element sub(const Element& a, const Element& b) const;
  [[nodiscard]] Element neg(const Element& a) const;
  [[nodiscard]] Element mul(const Element& a, const Element& b) const;
  /// Throws std::domain_error for zero.
  [[nodiscard]] Element inv(const Element& a) const;
  [[nodiscard]] Element div(const Element& a, const Element& b) const { return mul(a, inv(b)); }
  [[nodiscard]] Element pow(const Element& a, unsigned e) const;
  [[nodiscard]] static bool isZero(const Element& a);
  /// Image under zeta -> exp(2 pi i j / N).
  [[nodiscard]] std::complex<double> embed(const Element& a, unsigned j) const;
  [[nodiscard]] std::string format(const Element& a) const;

  friend bool operator==(const CyclotomicField& a, const CyclotomicField& b) { return a.n_ == b.n_; }

 private:
  unsigned n_;
  std::vector<Rational> modulus_;  // monic Phi_N
};

/// Square matrix over Q(zeta_N), row-major.
struct CycMatrix {
  std::size_t n = 0;
  std::vector<CyclotomicField::Element> entries;
  [[nodiscard]] const CyclotomicField::Element& operator()(std::size_t i, std::size_t j) const { return entries[i * n + j]; }
  CyclotomicField::Element& operator()(std::size_t i, std::size_t j) { return entries[i * n + j]; }
};

CycMatrix cycIdentity(const CyclotomicField& k, std::size_t n);
CycMatrix cycMul(const CyclotomicField& k, const CycMatrix& a, const CycMatrix& b);

/// Polynomial over K, constant term first.
using CycPoly = std::vector<CyclotomicField::Element>;

/// Monic minimal polynomial over K by Krylov elimination.
CycPoly minimalPolynomial(const CyclotomicField& k, const CycMatrix& m);
/// All roots of g lying in K, without repetition, sorted by coordinates.
std::vector<CyclotomicField::Element> rootsInField(const CyclotomicField& k, const CycPoly& g);
/// Is y^r - b irreducible over K (Capelli's criterion)?
bool binomialIrreducible(const CyclotomicField& k, unsigned r, const CyclotomicField::Element& b);

class NotScalarPower : public std::invalid_argument {
 public:
  explicit NotScalarPower(const std::string& what) : std::invalid_argument(what) {}
};

struct BinomialFactor {
  CyclotomicField::Element b;  // the factor is y^r - b
  bool irreducible = false;
};

struct MinpolyReport {
  unsigned conductor = 0;
  unsigned scalarPower = 0;           // least m with M^m scalar
  CyclotomicField::Element scalar;    // M^m = scalar * I
  CycPoly minpoly;
  unsigned r = 0;                     // 0 when no binomial shape exists over K
  std::vector<BinomialFactor> factors;
  bool productMatches = false;        // prod (y^r - b) == minpoly
  bool mayChangeWithLargerN = false;  // some factor with r > 1: irreducibility only certified over this K
};

/// Structure of the minimal polynomial of M with M^m scalar (m <= 24): the
/// least r | m with minpoly(y) = h(y^r) and h split over K. When K is too
/// small for such an r to exist the report has r = 0 and no factors.
MinpolyReport minpolyStructure(const CyclotomicField& k, const CycMatrix& m);

}  // namespace aniso
