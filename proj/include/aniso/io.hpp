#pragma once

#include "aniso/bounds.hpp"
#include "aniso/brauer.hpp"
#include "aniso/cyclotomic.hpp"
#include "aniso/finite_field.hpp"
#include "aniso/matrix.hpp"
#include "aniso/quadform.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace aniso {

using Json = nlohmann::json;

/// Malformed or out-of-range input; the CLI maps it to exit code 1.
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

Json loadJsonFile(const std::string& path);

// {"n": 2, "entries": [[0,-1],[1,0]]}
IntMatrix intMatrixFromJson(const Json& j);
Json toJson(const IntMatrix& m);
Json toJson(const IntVector& v);

struct GeneratorSet {
  Eigen::Index n = 0;
  std::vector<IntMatrix> generators;
};
/// Groups use "n", lattices "rank"; `dimKey` picks which.
GeneratorSet generatorsFromJson(const Json& j, const std::string& dimKey);

/// {"p": 2, "k": 1}.
FiniteField fieldFromJson(const Json& j);
Json toJson(const FiniteField& f);

/// Form JSON: {"field": {"p","k"} | "Q", "dim": 2, "coeffs": {"11": 1, "12": "w"}}.
using AnyForm = std::variant<RatForm, FqForm>;
AnyForm formFromJson(const Json& j);
Json toJson(const FqForm& q);
Json toJson(const RatForm& q);

Json fqMatrixToJson(const FiniteField& f, const FqMatrix& m);
/// Entries may be integers (reduced mod p) or strings FiniteField::parse accepts.
FqMatrix fqMatrixFromJson(const FiniteField& f, const Json& j);

/// {"field": {...}, "points": ["0", "1", "w", "inf"]}; points must be distinct.
struct DeltaInput {
  FiniteField field;
  std::vector<ProjectivePoint> points;
};
DeltaInput deltaFromJson(const Json& j);

/// {"n": 2, "entries": [[...]]}; an entry is an integer, a rational string,
/// or a list of rational coordinates in the powers of zeta.
CycMatrix cycMatrixFromJson(const CyclotomicField& k, const Json& j);

Json toJson(const BoundResult& r);

}  // namespace aniso
