#pragma once

#include "aniso/matrix.hpp"

#include <vector>

namespace aniso {

/// U * A * V = S with U, V unimodular and S diagonal, d_1 | d_2 | ... .
struct SnfDecomposition {
  IntMatrix S, U, V;

  /// Diagonal of S (length min(rows, cols)), all non-negative.
  [[nodiscard]] std::vector<Int> invariantFactors() const;
  /// Number of nonzero invariant factors.
  [[nodiscard]] Eigen::Index rank() const;
};

/// Smith normal form of an arbitrary (possibly rectangular) integer matrix.
/// Pivot rule: smallest nonzero absolute value, ties broken row-major.
SnfDecomposition snf(const IntMatrix& a);

/// Z-basis of {v : A v = 0}, as the columns of the returned matrix.
IntMatrix integerKernel(const IntMatrix& a);

/// Solves A X = B over Z; throws std::domain_error if no integral solution.
IntMatrix solveIntegral(const IntMatrix& a, const IntMatrix& b);

}  // namespace aniso
