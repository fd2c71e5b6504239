#pragma once

#include "aniso/finite_field.hpp"
#include "aniso/matrix.hpp"
#include "aniso/rational.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace aniso {

class SearchSpaceTooLarge : public std::invalid_argument {
 public:
  explicit SearchSpaceTooLarge(const std::string& what) : std::invalid_argument(what) {}
};
class IsotropicAxis : public std::domain_error {
 public:
  explicit IsotropicAxis(const std::string& what) : std::domain_error(what) {}
};
class CharTwo : public std::domain_error {
 public:
  explicit CharTwo(const std::string& what) : std::domain_error(what) {}
};
class Degenerate : public std::domain_error {
 public:
  explicit Degenerate(const std::string& what) : std::domain_error(what) {}
};
class OddDimension : public std::domain_error {
 public:
  explicit OddDimension(const std::string& what) : std::domain_error(what) {}
};

/// Q with the same interface as FiniteField.
struct RationalField {
  using Element = Rational;
  static Element zero() { return 0; }
  static Element one() { return 1; }
  [[nodiscard]] unsigned characteristic() const { return 0; }
  [[nodiscard]] Element fromInt(std::int64_t v) const { return Rational(static_cast<long long>(v)); }
  [[nodiscard]] Element add(const Element& a, const Element& b) const { return a + b; }
  [[nodiscard]] Element sub(const Element& a, const Element& b) const { return a - b; }
  [[nodiscard]] Element neg(const Element& a) const { return -a; }
  [[nodiscard]] Element mul(const Element& a, const Element& b) const { return a * b; }
  [[nodiscard]] Element div(const Element& a, const Element& b) const { return a / b; }
  [[nodiscard]] std::string format(const Element& a) const { return a.str(); }
  /// "3", "-2/5".
  [[nodiscard]] Element parse(std::string_view text) const;
  friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

/// q(x) = sum_{i <= j} c_ij x_i x_j. Only the upper triangle of the
/// coefficient matrix is used, so the form is meaningful in characteristic 2.
template <typename Field>
class QuadForm {
 public:
  using Element = typename Field::Element;
  using Mat = Matrix<Element>;
  using Vec = Vector<Element>;

  QuadForm(Field field, Eigen::Index dim) : field_(std::move(field)), c_(Mat::Constant(dim, dim, Field::zero())) {
    if (dim < 1 || dim > 6) throw std::invalid_argument("form dimension must be between 1 and 6");
  }

  [[nodiscard]] const Field& field() const { return field_; }
  [[nodiscard]] Eigen::Index dim() const { return c_.rows(); }
  /// c_ij for i <= j (indices are 0-based).
  [[nodiscard]] const Element& coeff(Eigen::Index i, Eigen::Index j) const { return i <= j ? c_(i, j) : c_(j, i); }
  void setCoeff(Eigen::Index i, Eigen::Index j, Element v) { (i <= j ? c_(i, j) : c_(j, i)) = std::move(v); }

  [[nodiscard]] Element operator()(const Vec& x) const {
    Element s = Field::zero();
    for (Eigen::Index i = 0; i < dim(); ++i)
      for (Eigen::Index j = i; j < dim(); ++j) s = field_.add(s, field_.mul(c_(i, j), field_.mul(x(i), x(j))));
    return s;
  }

  friend bool operator==(const QuadForm& a, const QuadForm& b) {
    if (a.dim() != b.dim()) return false;
    for (Eigen::Index i = 0; i < a.dim(); ++i)
      for (Eigen::Index j = i; j < a.dim(); ++j)
        if (!(a.c_(i, j) == b.c_(i, j))) return false;
    return true;
  }

 private:
  Field field_;
  Mat c_;
};

using RatForm = QuadForm<RationalField>;
using FqForm = QuadForm<FiniteField>;

/// B_q(v, w) = q(v + w) - q(v) - q(w) as a symmetric matrix.
template <typename Field>
Matrix<typename Field::Element> bilinear(const QuadForm<Field>& q) {
  const auto& f = q.field();
  const Eigen::Index n = q.dim();
  Matrix<typename Field::Element> b(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) b(i, j) = i == j ? f.add(q.coeff(i, i), q.coeff(i, i)) : q.coeff(i, j);
  return b;
}

template <typename Field>
typename Field::Element bilinearValue(const QuadForm<Field>& q, const Vector<typename Field::Element>& v,
                                      const Vector<typename Field::Element>& w) {
  const auto& f = q.field();
  Vector<typename Field::Element> sum(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) sum(i) = f.add(v(i), w(i));
  return f.sub(f.sub(q(sum), q(v)), q(w));
}

template <typename Field>
Matrix<typename Field::Element> matMul(const Field& f, const Matrix<typename Field::Element>& a,
                                       const Matrix<typename Field::Element>& b) {
  Matrix<typename Field::Element> c(a.rows(), b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < b.cols(); ++j) {
      typename Field::Element s = Field::zero();
      for (Eigen::Index k = 0; k < a.cols(); ++k) s = f.add(s, f.mul(a(i, k), b(k, j)));
      c(i, j) = s;
    }
  }
  return c;
}

/// The form x -> q(M x); the columns of M are the new basis.
template <typename Field>
QuadForm<Field> transform(const QuadForm<Field>& q, const Matrix<typename Field::Element>& m) {
  using Vec = Vector<typename Field::Element>;
  QuadForm<Field> out(q.field(), m.cols());
  for (Eigen::Index i = 0; i < m.cols(); ++i) {
    const Vec ci = m.col(i);
    out.setCoeff(i, i, q(ci));
    for (Eigen::Index j = i + 1; j < m.cols(); ++j) out.setCoeff(i, j, bilinearValue(q, ci, Vec(m.col(j))));
  }
  return out;
}

/// Matrix of u -> u - B_q(v, u) / q(v) v. Needs characteristic != 2 and q(v) != 0.
template <typename Field>
Matrix<typename Field::Element> reflection(const QuadForm<Field>& q, const Vector<typename Field::Element>& v) {
  const auto& f = q.field();
  if (f.characteristic() == 2) throw CharTwo("reflections need characteristic other than 2");
  if (v.size() != q.dim()) throw std::invalid_argument("axis length does not match form dimension");
  const auto qv = q(v);
  if (qv == Field::zero()) throw IsotropicAxis("axis vector is isotropic");
  const Eigen::Index n = q.dim();
  const auto b = bilinear(q);
  Matrix<typename Field::Element> r(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    // B(v, e_j) = (v^T B)_j
    auto bvj = Field::zero();
    for (Eigen::Index k = 0; k < n; ++k) bvj = f.add(bvj, f.mul(v(k), b(k, j)));
    const auto t = f.div(bvj, qv);
    for (Eigen::Index i = 0; i < n; ++i) r(i, j) = f.sub(i == j ? Field::one() : Field::zero(), f.mul(t, v(i)));
  }
  return r;
}

/// Nonzero v with q(v) = 0, scanning F_q^n lexicographically; nullopt when
/// anisotropic. Throws SearchSpaceTooLarge when q^n > 10^7.
std::optional<FqVector> representsZero(const FqForm& q);

struct ArfResult {
  FiniteField::Element a = 0;
  FqMatrix basisChange;  // columns: e1, e2, e3, ... with q(M x) canonical
  FiniteField::Element arfClass = 0;  // smallest code in a + {c^2 - c}
};

/// The canonical form x1^2 + x1 x2 + a x2^2 + x3 x4 + ... + x_{2k-1} x_{2k}.
FqForm arfCanonicalForm(const FiniteField& f, Eigen::Index dim, FiniteField::Element a);
/// Representative of a in the cokernel of c -> c^2 - c (char 2).
FiniteField::Element arfCoset(const FiniteField& f, FiniteField::Element a);
ArfResult arfCanonicalize(const FqForm& q);
bool arfEquivalence(const FqForm& q1, const FqForm& q2);
/// Exhaustive search for M in GL_n(F_q) with q1(M x) = q2(x); at most 10^6 matrices.
std::optional<FqMatrix> bruteForceEquivalence(const FqForm& q1, const FqForm& q2);

struct OrderScanReport {
  unsigned p = 0;
  std::uint64_t groupOrder = 0;
  std::map<std::uint64_t, std::uint64_t> orderCounts;  // element order -> how many
  bool hasOrderP = false;
};

/// Enumerates O(q) over F_p for an anisotropic form in odd characteristic.
OrderScanReport orderPScan(const FqForm& q);

}  // namespace aniso
