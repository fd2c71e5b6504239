#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace aniso {

/// The query lies outside the parameter grid the ledger covers.
class OutOfLedger : public std::invalid_argument {
 public:
  explicit OutOfLedger(const std::string& what) : std::invalid_argument(what) {}
};

// Characteristic is 0 or a prime. `rootsOfUnity` is the standing "field
// contains all roots of 1" hypothesis; every geometric rule needs it.

struct TorusQuery {
  int n = 1;
};
struct UpsilonQuery {
  int n = 1;
};
struct SeveriBrauerQuery {
  int n = 2;
  bool division = true;
  int characteristic = 0;
  bool rootsOfUnity = true;
};
struct SeveriBrauerPQuery {
  int nPrime = 1;  // n = n' p^m
  int p = 2;
  int m = 1;
  bool rootsOfUnity = true;
};
struct QuadricQuery {
  int n = 3;  // Q in P^{n-1}
  bool hasPoint = false;
  int characteristic = 0;
  bool perfect = true;
  bool rootsOfUnity = true;
};
struct DelPezzoQuery {
  int degree = 6;
  int characteristic = 0;
  bool perfect = true;
  bool rootsOfUnity = true;
};
struct ConicBundleQuery {
  int m = 0;  // geometrically reducible fibres
  int characteristic = 0;
  bool rootsOfUnity = true;
};
enum class SurfaceKind { ProductWithConic, SeveriBrauerSurface, TwoConics, QuadricPicZ };
struct BrauerKernelQuery {
  SurfaceKind surface = SurfaceKind::ProductWithConic;
};
struct TorsionPrimesQuery {
  std::string dynkinType;  // "A3", "E8", ...
};
/// The nonconstructive constant L(r, n). With a positive characteristic and
/// |pi_1| given, also reports the exponent bound p^m for the p-part.
struct LinearAlgebraicQuery {
  int r = 1;
  int n = 1;
  int characteristic = 0;
  std::int64_t pi1Order = 0;  // 0: not given
  std::vector<std::string> dynkinTypes;
};

using BoundQuery = std::variant<TorusQuery, UpsilonQuery, SeveriBrauerQuery, SeveriBrauerPQuery,
                                QuadricQuery, DelPezzoQuery, ConicBundleQuery, BrauerKernelQuery,
                                TorsionPrimesQuery, LinearAlgebraicQuery>;

enum class BoundKind {
  Order,          // |G| <= value
  Factor,         // |G|' <= value
  Structure,      // G = H x| S, |H| <= value, exponent(S) <= exponent
  Unbounded,
  AtlasValue,     // a known exact or tabulated number
  Symbolic,       // exists, not computed
  Set,            // primes
  Contradiction,  // the case cannot occur under the hypotheses
};

std::string kindName(BoundKind k);

struct BoundResult {
  std::string caseName;
  BoundKind kind = BoundKind::Order;
  std::optional<std::int64_t> value;
  std::optional<std::int64_t> exponent;  // element exponent, or exponent of S
  std::vector<int> primes;
  std::string formula;
  std::vector<std::string> citations;  // front() governs
  [[nodiscard]] const std::string& citation() const { return citations.front(); }
};

/// Throws OutOfLedger off the documented grid; never extrapolates.
BoundResult evaluate(const BoundQuery& q);

struct DelPezzoSurface {
  int degree = 9;
};
struct ConicBundleSurface {
  int m = 0;
};
using MinimalSurface = std::variant<DelPezzoSurface, ConicBundleSurface>;

/// Bound for a finite G acting on a G-minimal surface, following the case
/// split del Pezzo / conic bundle.
BoundResult assembleBirBound(const MinimalSurface& s, int characteristic, bool perfect,
                             bool rootsOfUnity = true);

std::vector<int> torsionPrimes(const std::string& dynkinType);

/// order = l p^m with gcd(l, p) = 1; returns {l, m}.
std::pair<std::int64_t, int> splitPrimePart(std::int64_t order, int p);

/// Every anchor any rule can cite.
const std::vector<std::string>& citationTable();

/// One row of the ledger dump.
struct LedgerRow {
  std::string label;  // e.g. "quadric n=4 no point char 0"
  BoundQuery query;
  std::optional<MinimalSurface> surface;  // set for assembled rows
  int characteristic = 0;
  bool perfect = true;
  BoundResult result;
};

std::vector<LedgerRow> ledgerTable();

/// Upsilon(n) for n <= 3.
std::int64_t upsilonValue(int n);

}  // namespace aniso
