#pragma once

#include "aniso/matrix.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace aniso {

/// Dense integer polynomial, coefficient i multiplies x^i; no trailing zeros.
using IntPoly = std::vector<Int>;

/// Characteristic polynomial det(xI - A), monic, via Faddeev-LeVerrier.
IntPoly characteristicPolynomial(const IntMatrix& a);
/// The d-th cyclotomic polynomial.
IntPoly cyclotomicPolynomial(unsigned d);
unsigned eulerPhi(unsigned n);
/// lcm{d : phi(d) <= n}; every finite-order element of GL_n(Z) has order dividing it.
std::uint64_t finiteOrderExponent(unsigned n);

/// Order of an element of GL_n(Z): nullopt means infinite order.
/// Throws std::domain_error when det(A) is not +-1.
std::optional<std::uint64_t> matrixOrder(const IntMatrix& a);

/// Z-basis (columns) of the sublattice fixed by every generator. With no
/// generators the dimension must be supplied.
IntMatrix invariantSublattice(const std::vector<IntMatrix>& gens, Eigen::Index dim);

/// Element of (Z/dZ)^n together with its additive order.
struct ModVector {
  std::vector<std::int64_t> entries;
  std::int64_t order = 1;
  friend bool operator==(const ModVector&, const ModVector&) = default;
};

/// The fixed submodule {v in (Z/dZ)^n : g v = v for all g}, stored as a
/// direct sum of cyclic groups Z/c_i with explicit generators.
struct FixedModule {
  std::int64_t modulus = 2;
  Eigen::Index dim = 0;
  std::vector<std::int64_t> cyclicOrders;       // c_i, each dividing modulus, all > 1
  std::vector<std::vector<std::int64_t>> gens;  // generator of the i-th cyclic summand

  /// Total number of elements, prod c_i.
  [[nodiscard]] std::uint64_t size() const;
  /// Number of elements whose additive order divides e.
  [[nodiscard]] std::uint64_t countDividing(std::int64_t e) const;
  /// Number of elements of exact additive order e.
  [[nodiscard]] std::uint64_t countExactOrder(std::int64_t e) const;
  /// Every element, in lexicographic order of its entries.
  [[nodiscard]] std::vector<ModVector> elements() const;
};

FixedModule fixedModule(const std::vector<IntMatrix>& gens, Eigen::Index dim, std::int64_t d);

/// All coset representatives of the fixed submodule of (Z/dZ)^n, annotated
/// with exact additive order, sorted lexicographically.
std::vector<ModVector> kernelMod(const std::vector<IntMatrix>& gens, Eigen::Index dim, std::int64_t d);

std::int64_t additiveOrder(const std::vector<std::int64_t>& v, std::int64_t d);

}  // namespace aniso
