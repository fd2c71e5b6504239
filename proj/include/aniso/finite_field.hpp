#pragma once

#include "aniso/matrix.hpp"

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace aniso {

/// The field F_q, q = p^k, realised as F_p[w]/(f) where f is the
/// lexicographically smallest monic irreducible polynomial of degree k.
///
/// Elements are integer codes: the code of c_0 + c_1 w + ... + c_{k-1} w^{k-1}
/// is sum c_i p^i. Codes 0 and 1 are the field's zero and one; the natural
/// ordering of codes is the fixed element ordering used throughout.
/// Multiplication goes through discrete log tables, so copies are cheap.
class FiniteField {
 public:
  using Element = std::uint32_t;

  /// Throws std::invalid_argument unless p is a prime <= 13 and 1 <= k <= 4.
  FiniteField(unsigned p, unsigned k);

  [[nodiscard]] unsigned characteristic() const { return p_; }
  [[nodiscard]] unsigned degree() const { return k_; }
  [[nodiscard]] Element order() const { return q_; }
  /// Coefficients of the defining polynomial, constant term first, monic.
  [[nodiscard]] const std::vector<unsigned>& modulus() const { return tables_->modulus; }
  /// A generator of the multiplicative group (smallest such code).
  [[nodiscard]] Element primitiveElement() const { return tables_->primitive; }

  static constexpr Element zero() { return 0; }
  static constexpr Element one() { return 1; }
  [[nodiscard]] Element fromInt(std::int64_t v) const;

  [[nodiscard]] Element add(Element a, Element b) const;
  [[nodiscard]] Element sub(Element a, Element b) const;
  [[nodiscard]] Element neg(Element a) const;
  [[nodiscard]] Element mul(Element a, Element b) const {
    if (a == 0 || b == 0) return 0;
    return tables_->exp[tables_->log[a] + tables_->log[b]];
  }
  /// Throws std::domain_error for zero.
  [[nodiscard]] Element inv(Element a) const;
  [[nodiscard]] Element div(Element a, Element b) const { return mul(a, inv(b)); }
  [[nodiscard]] Element pow(Element a, std::uint64_t e) const;
  /// a^p.
  [[nodiscard]] Element frobenius(Element a) const { return pow(a, p_); }
  /// Square root in characteristic 2 (the field is perfect): a^(2^(k-1)).
  [[nodiscard]] Element sqrtChar2(Element a) const;
  /// Multiplicative order; throws for zero.
  [[nodiscard]] std::uint64_t multiplicativeOrder(Element a) const;

  [[nodiscard]] std::vector<unsigned> digits(Element a) const;
  [[nodiscard]] std::string format(Element a) const;
  /// Accepts integers ("0", "3", "-1"), and polynomials in w ("w", "w^2+2w+1", "2*w").
  [[nodiscard]] Element parse(std::string_view text) const;

  friend bool operator==(const FiniteField& a, const FiniteField& b) { return a.p_ == b.p_ && a.k_ == b.k_; }

 private:
  struct Tables {
    std::vector<unsigned> modulus;
    std::vector<Element> exp;  // doubled so exp[log a + log b] needs no reduction
    std::vector<std::uint32_t> log;
    Element primitive = 1;
  };

  unsigned p_;
  unsigned k_;
  Element q_;
  std::shared_ptr<const Tables> tables_;
};

/// Lexicographically smallest monic irreducible polynomial of degree k over F_p
/// (constant term first in the returned vector, comparison from the top coefficient down).
std::vector<unsigned> smallestIrreducible(unsigned p, unsigned k);
bool isIrreducible(const std::vector<unsigned>& poly, unsigned p);
bool isPrime(std::uint64_t n);

/// Matrices over F_q hold element codes; arithmetic goes through the field.
using FqMatrix = Matrix<FiniteField::Element>;
using FqVector = Vector<FiniteField::Element>;

FqMatrix fqIdentity(Eigen::Index n);
FqMatrix fqMul(const FiniteField& f, const FqMatrix& a, const FqMatrix& b);
FqVector fqMul(const FiniteField& f, const FqMatrix& a, const FqVector& v);
FiniteField::Element fqDet(const FiniteField& f, const FqMatrix& a);
/// Throws std::domain_error when singular.
FqMatrix fqInverse(const FiniteField& f, const FqMatrix& a);
Eigen::Index fqRank(const FiniteField& f, const FqMatrix& a);
std::string fqKey(const FqMatrix& a);
/// Every invertible n x n matrix, in lexicographic order of entries.
std::vector<FqMatrix> generalLinearGroup(const FiniteField& f, Eigen::Index n);
std::uint64_t generalLinearOrder(std::uint64_t q, unsigned n);

}  // namespace aniso
