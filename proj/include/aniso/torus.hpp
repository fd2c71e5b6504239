#pragma once

#include "aniso/glnz.hpp"
#include "aniso/lattice.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace aniso {

/// Cocharacter lattice Z^n with the finite image of the Galois group acting.
class GaloisLattice {
 public:
  /// Closes `generators` in GL_n(Z); rank must be 1..4.
  GaloisLattice(Eigen::Index rank, std::vector<IntMatrix> generators);

  [[nodiscard]] Eigen::Index rank() const { return gamma_.dim(); }
  [[nodiscard]] const MatrixGroup& gamma() const { return gamma_; }

 private:
  MatrixGroup gamma_;
};

struct TorsionEntry {
  std::int64_t d = 0;
  std::uint64_t exactOrderCount = 0;  // invariant classes in L/dL of exact order d
  std::uint64_t invariantCount = 0;   // all invariant classes in L/dL
  bool characteristicDivides = false;  // d-torsion of T(K) is not H^0(Gamma, L/dL) here
};

struct TorsionProfile {
  std::int64_t dMax = 0;
  unsigned characteristic = 0;
  std::vector<TorsionEntry> entries;  // d = 2..dMax
  std::int64_t maxExactOrder = 1;
};

inline constexpr std::int64_t kDefaultTorsionScan = 60;

bool isAnisotropic(const GaloisLattice& l);

/// Invariant classes of each exact order d <= dMax (dMax <= 60).
TorsionProfile torsionProfile(const GaloisLattice& l, std::int64_t dMax = kDefaultTorsionScan,
                              unsigned characteristic = 0);

/// Sum of gamma(v) over the group.
IntVector traceVector(const GaloisLattice& l, const IntVector& v);

class NotCyclic : public std::invalid_argument {
 public:
  explicit NotCyclic(const std::string& what) : std::invalid_argument(what) {}
};

struct H1Result {
  std::size_t groupOrder = 0;
  IntMatrix sigma;
  std::vector<Int> cyclicFactors;  // H^1 = sum Z/c_i, each c_i > 1
  bool annihilatedByOrder = false;
  [[nodiscard]] Int size() const;
};

/// H^1(<sigma>, L) = ker(Norm) / im(sigma - 1).
H1Result h1Cyclic(const GaloisLattice& l);

}  // namespace aniso
