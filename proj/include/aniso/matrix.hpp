#pragma once

#include "aniso/checked_int.hpp"
#include "aniso/rational.hpp"

#include <Eigen/Core>

#include <cstdint>
#include <string>
#include <vector>

namespace aniso {

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = Matrix<Int>;
using IntVector = Vector<Int>;
using RatMatrix = Matrix<Rational>;
using RatVector = Vector<Rational>;

/// Matrix over Z/mZ with entries kept in [0, m).
struct ModMatrix {
  Matrix<std::int64_t> entries;
  std::int64_t modulus = 2;

  [[nodiscard]] Eigen::Index size() const { return entries.rows(); }
  friend bool operator==(const ModMatrix& a, const ModMatrix& b) {
    return a.modulus == b.modulus && a.entries == b.entries;
  }
};

ModMatrix reduceMod(const IntMatrix& a, std::int64_t modulus);
ModMatrix operator*(const ModMatrix& a, const ModMatrix& b);

/// Builds an IntMatrix from nested initializer rows; rows must be equal length.
IntMatrix intMatrix(std::initializer_list<std::initializer_list<long long>> rows);
IntVector intVector(std::initializer_list<long long> entries);

template <typename Scalar>
Matrix<Scalar> identity(Eigen::Index n) {
  return Matrix<Scalar>::Identity(n, n);
}

/// Determinant by fraction-free (Bareiss) elimination; exact over Z.
Int determinant(const IntMatrix& a);
/// Determinant by Gaussian elimination over Q.
Rational determinant(const RatMatrix& a);

/// Inverse of a unimodular integer matrix (|det| = 1); throws otherwise.
IntMatrix unimodularInverse(const IntMatrix& a);
/// Inverse over Q; throws std::domain_error when singular.
RatMatrix inverse(const RatMatrix& a);
/// Rank over Q.
Eigen::Index rank(const RatMatrix& a);

IntMatrix matrixPower(const IntMatrix& a, std::uint64_t exp);

RatMatrix toRational(const IntMatrix& a);

/// Canonical row-major encoding; equal matrices give equal keys.
std::string matrixKey(const IntMatrix& a);

std::string toText(const IntMatrix& a);
std::string toText(const IntVector& v);

}  // namespace aniso
