#pragma once

#include "aniso/finite_field.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace aniso {

class GroupTooLarge : public std::invalid_argument {
 public:
  explicit GroupTooLarge(const std::string& what) : std::invalid_argument(what) {}
};

inline constexpr std::size_t kFiniteGroupCap = 100'000;

/// A finite subgroup of GL_n(F_q), or of PGL_n(F_q) when `projective` (each
/// element then normalised so its first nonzero entry, row-major, is 1).
struct FiniteMatrixGroup {
  FiniteField field;
  Eigen::Index n = 0;
  bool projective = false;
  std::vector<FqMatrix> elements;
  [[nodiscard]] std::size_t order() const { return elements.size(); }
};

FqMatrix projectiveNormalize(const FiniteField& f, const FqMatrix& m);
FiniteMatrixGroup finiteClosure(const FiniteField& f, Eigen::Index n, const std::vector<FqMatrix>& gens, bool projective,
                                std::size_t cap = kFiniteGroupCap);
FiniteMatrixGroup generalLinear(const FiniteField& f, Eigen::Index n);
FiniteMatrixGroup projectiveGeneralLinear(const FiniteField& f, Eigen::Index n);
/// Order of an element (in PGL for projective groups).
std::uint64_t elementOrder(const FiniteMatrixGroup& g, const FqMatrix& m);

enum class AuditMode { General, Projective };

struct ExponentAudit {
  AuditMode mode = AuditMode::General;
  unsigned characteristic = 0;
  std::uint64_t groupOrder = 0;
  std::uint64_t groupOrderPrime = 0;  // |G|': largest factor coprime to p
  std::uint64_t nPrime = 0;           // largest factor of n coprime to p
  std::uint64_t d = 1;                // lcm of the orders coprime to p
  Int bound = 1;                      // d^n, or (n' d)^(n-1)
  bool hypothesisHolds = true;        // projective: every element order coprime to p
  std::uint64_t compared = 0;         // the quantity checked against the bound
  bool holds = true;
  [[nodiscard]] Int slack() const { return bound - Int(static_cast<long long>(compared)); }
  /// The inequality fails although its hypothesis holds.
  [[nodiscard]] bool violation() const { return hypothesisHolds && !holds; }
};

/// General: |G|' <= d^n. Projective: |G| <= (n' d)^(n-1) when no element
/// has order divisible by p; otherwise |G|' is compared and the failed
/// hypothesis is reported.
ExponentAudit exponentBoundAudit(const FiniteMatrixGroup& g, AuditMode mode);

/// Cyclic subgroups and subgroups generated by two cyclic ones, without repeats.
std::vector<FiniteMatrixGroup> subgroupSweep(const FiniteMatrixGroup& g);

}  // namespace aniso
