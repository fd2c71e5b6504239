#pragma once

#include "aniso/finite_field.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace aniso {

/// The cokernel of theta(c) = c - c^p on F_q.
struct ASCokernel {
  FiniteField field;
  std::vector<FiniteField::Element> image;  // sorted by code
  std::vector<FiniteField::Element> reps;   // smallest code of each coset, sorted
  [[nodiscard]] std::size_t order() const { return reps.size(); }
  [[nodiscard]] bool inImage(FiniteField::Element a) const;
  [[nodiscard]] FiniteField::Element representative(FiniteField::Element a) const;
};

ASCokernel asCokernel(const FiniteField& f);

/// A point of P^1(F_q); nullopt is the point at infinity.
struct ProjectivePoint {
  std::optional<FiniteField::Element> affine;
  friend bool operator==(const ProjectivePoint&, const ProjectivePoint&) = default;
};

/// "inf" or anything FiniteField::parse accepts ("0", "1", "w", "w^2+1").
ProjectivePoint parsePoint(const FiniteField& f, std::string_view text);
std::string formatPoint(const FiniteField& f, const ProjectivePoint& p);

/// An invertible function on P^1 minus Delta, known through its divisor.
struct FactoredFunction {
  std::vector<ProjectivePoint> points;
  std::vector<std::int64_t> multiplicities;
};

class DivisorNotPrincipal : public std::invalid_argument {
 public:
  explicit DivisorNotPrincipal(const std::string& what) : std::invalid_argument(what) {}
};

struct PointResidue {
  ProjectivePoint point;
  FiniteField::Element value = 0;           // t * (ord_P f mod p)
  FiniteField::Element representative = 0;  // its class in coker theta
};

struct ResidueData {
  FiniteField::Element t = 0;
  std::vector<PointResidue> residues;
  FiniteField::Element rawSum = 0;  // sum of values; zero for a principal divisor
};

/// Residues of t df/f.
ResidueData residues(const FiniteField& f, const FactoredFunction& fn, FiniteField::Element t);

struct AdmissibleForm {
  FactoredFunction function;
  FiniteField::Element t = 0;
};

struct Obstruction {
  std::string reason;
};

/// Multiplicities nonzero mod p summing to zero, and the smallest t outside
/// the image of theta; an Obstruction when p = 2 and |Delta| is odd.
std::variant<AdmissibleForm, Obstruction> admissibleForm(const FiniteField& f, const std::vector<ProjectivePoint>& delta);

enum class ConicClass { NoPoint, Splits };

struct ConicResult {
  ConicClass cls = ConicClass::Splits;
  std::optional<FiniteField::Element> root;  // of h^2 - h - a when it splits
};

/// x^2 + xy + a y^2 + t z^2 over F_q((t)), q even: no point iff h^2 - h - a is irreducible.
ConicResult conicChar2Class(const FiniteField& f, FiniteField::Element a);

}  // namespace aniso
