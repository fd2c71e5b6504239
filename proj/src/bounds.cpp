#include "aniso/bounds.hpp"

#include "aniso/checked_int.hpp"
#include "aniso/finite_field.hpp"

#include <algorithm>
#include <array>
#include <cctype>

namespace aniso {
namespace {

namespace cite {
// Verbatim anchors, '$' removed and whitespace collapsed.
const std::string kUpsilon = "\\Upsilon(1)=2, \\Upsilon(2)=12, and \\Upsilon(3)=48";
const std::string kTorus = "order at most~\\Upsilon(n)^n";
const std::string kSbOrder = "g^{n}=1 and |G|\\leqslant {n}^{2(n-1)}";
const std::string kSb27 = "|G|\\leqslant 27";
const std::string kSbDivision = "has bounded finite subgroups if and only if A is a division algebra";
const std::string kSbUnbounded = "elements of arbitrarily large finite order";
const std::string kSbp = "semi-direct product G=H\\rtimes S";
const std::string kSbpExp = "an abelian p-group S of exponent less than or equal to~p^m";
const std::string kQuadricOdd = "at most~2^{n-1}";
const std::string kQuadricEven = "at most~8^{n-1}";
const std::string kQuadric4 = "at most~32";
const std::string kQuadricPoint = "has bounded finite subgroups if and only if~Q(\\mathbb{K})=\\varnothing";
const std::string kConicChar2 = "has unbounded finite subgroups";
const std::string kDp432 = "12\\cdot 36=432";
const std::string kDp432Stmt = "|G|\\leqslant 432";
const std::string kDpFactor432 = "|G|' \\leqslant 432";
const std::string kDp108 = "|G|' \\leqslant 108";
const std::string kDp48 = "|G|' \\leqslant 48";
const std::string kDp648 = "|\\operatorname{Aut}(X)|\\leqslant 648";
const std::string kDpWeyl = "696\\,729\\,600";
const std::string kDp81 = "we have |G|\\leqslant 81";
const std::string kDp9Char3 = "so that~|G|'=1";
const std::string kDp8 = "we have |G|\\leqslant 32";
const std::string kDp8Char2 = "the group G is a 2-group, so that~|G|'=1";
const std::string kDp7 = "that d=8 and X is of product type";
const std::string kConic = "d(m)= 16 m! works in all cases";
const std::string kConic0 = "is birational to the product";
const std::string kConic1 = "we have that m'>1";
const std::string kConic2 = "then |G| \\leqslant 16";
const std::string kConic2Char2 = "|G|' is equal to 1";
const std::string kConicLarge = "|G| \\leqslant 4m'!";
const std::string kConicLargeChar2 = "|G|'\\leqslant m'!";
const std::string kAssembly = "the order of G is bounded by universal constants";
const std::string kBr2 = "thus, has order 2";
const std::string kBr3 = "has order 3";
const std::string kBr4 = "has order 4";
const std::string kBr1 = "is trivial";
const std::string kTpEmpty = "to be the empty set";
const std::string kTp2 = "\\mathcal{T}(H)=\\{2\\}";
const std::string kTp23 = "\\mathcal{T}(H)= \\{2, 3\\}";
const std::string kTp235 = "\\mathcal{T}(H)= \\{2, 3, 5\\}";
const std::string kLag = "there exists a constant L=L(r,n)";
}  // namespace cite

std::int64_t checkedPow(std::int64_t base, std::int64_t e, const std::string& what) {
  try {
    Int r = 1;
    for (std::int64_t i = 0; i < e; ++i) r *= Int(base);
    if (!r.fitsInt64()) throw OverflowError("");
    return r.toInt64();
  } catch (const OverflowError&) {
    throw OutOfLedger(what + ": value exceeds the 64-bit ledger range");
  }
}

std::int64_t factorial(int m) {
  std::int64_t r = 1;
  for (int i = 2; i <= m; ++i) r *= i;
  return r;
}

void requireCharacteristic(int c) {
  if (c < 0 || (c > 0 && !isPrime(static_cast<std::uint64_t>(c))))
    throw OutOfLedger("characteristic must be 0 or a prime, got " + std::to_string(c));
}

void requireRoots(bool roots, const std::string& name) {
  if (!roots) throw OutOfLedger(name + ": needs a field containing all roots of unity");
}

BoundResult make(std::string name, BoundKind k, std::optional<std::int64_t> v, std::string formula,
                 std::vector<std::string> cites) {
  BoundResult r;
  r.caseName = std::move(name);
  r.kind = k;
  r.value = v;
  r.formula = std::move(formula);
  r.citations = std::move(cites);
  return r;
}

BoundResult evalUpsilon(const UpsilonQuery& q) {
  return make("minkowski_upsilon", BoundKind::AtlasValue, upsilonValue(q.n), "Upsilon(n)", {cite::kUpsilon});
}

BoundResult evalTorus(const TorusQuery& q) {
  const std::int64_t u = upsilonValue(q.n);
  return make("torus", BoundKind::Order, checkedPow(u, q.n, "torus"), "Upsilon(n)^n",
              {cite::kTorus, cite::kUpsilon});
}

BoundResult evalSeveriBrauer(const SeveriBrauerQuery& q) {
  requireCharacteristic(q.characteristic);
  requireRoots(q.rootsOfUnity, "severi_brauer");
  if (q.n < 2 || q.n > 10) throw OutOfLedger("severi_brauer: n must lie in [2, 10]");
  if (q.characteristic > 0 && q.n % q.characteristic == 0)
    throw OutOfLedger("severi_brauer: char divides n; use severi_brauer_p");
  if (!q.division)
    return make("severi_brauer", BoundKind::Unbounded, std::nullopt, "unbounded",
                {cite::kSbUnbounded, cite::kSbDivision});
  if (q.n == 3 && q.characteristic == 0) {
    auto r = make("severi_brauer", BoundKind::Order, 27, "27", {cite::kSb27, cite::kSbOrder});
    r.exponent = 3;
    return r;
  }
  auto r = make("severi_brauer", BoundKind::Order, checkedPow(q.n, 2 * (q.n - 1), "severi_brauer"),
                "n^{2(n-1)}", {cite::kSbOrder});
  r.exponent = q.n;
  return r;
}

BoundResult evalSeveriBrauerP(const SeveriBrauerPQuery& q) {
  requireRoots(q.rootsOfUnity, "severi_brauer_p");
  if (q.p < 2 || !isPrime(static_cast<std::uint64_t>(q.p))) throw OutOfLedger("severi_brauer_p: p must be prime");
  if (q.m < 1) throw OutOfLedger("severi_brauer_p: needs m >= 1 (otherwise use severi_brauer)");
  if (q.nPrime < 1 || q.nPrime % q.p == 0) throw OutOfLedger("severi_brauer_p: n' must be positive and prime to p");
  const std::int64_t n = q.nPrime * checkedPow(q.p, q.m, "severi_brauer_p");
  auto r = make("severi_brauer_p", BoundKind::Structure,
                checkedPow(q.nPrime, 2 * (n - 1), "severi_brauer_p"), "|H| <= n'^{2(n-1)}, exp(S) <= p^m",
                {cite::kSbp, cite::kSbpExp});
  r.exponent = checkedPow(q.p, q.m, "severi_brauer_p");
  return r;
}

BoundResult evalQuadric(const QuadricQuery& q) {
  requireCharacteristic(q.characteristic);
  requireRoots(q.rootsOfUnity, "quadric");
  if (q.n < 3 || q.n > 21) throw OutOfLedger("quadric: n must lie in [3, 21]");
  if (q.characteristic == 2 && !q.perfect) {
    if (q.n == 3 && !q.hasPoint)
      return make("quadric", BoundKind::Unbounded, std::nullopt, "unbounded", {cite::kConicChar2});
    throw OutOfLedger("quadric: non-perfect characteristic 2 is covered only for conics");
  }
  if (q.hasPoint)
    return make("quadric", BoundKind::Unbounded, std::nullopt, "unbounded", {cite::kQuadricPoint});
  BoundResult r;
  if (q.n == 4) {
    r = make("quadric", BoundKind::Order, 32, "32", {cite::kQuadric4, cite::kQuadricEven});
    r.exponent = 4;
  } else if (q.n % 2 == 1) {
    r = make("quadric", BoundKind::Order, checkedPow(2, q.n - 1, "quadric"), "2^{n-1}", {cite::kQuadricOdd});
    r.exponent = 2;
  } else {
    r = make("quadric", BoundKind::Order, checkedPow(8, q.n - 1, "quadric"), "8^{n-1}", {cite::kQuadricEven});
    r.exponent = 4;
  }
  return r;
}

BoundResult evalDelPezzo(const DelPezzoQuery& q) {
  requireCharacteristic(q.characteristic);
  requireRoots(q.rootsOfUnity, "del_pezzo");
  if (q.degree < 1 || q.degree > 9) throw OutOfLedger("del_pezzo: degree must lie in [1, 9]");
  if (q.degree >= 6) {
    const int c = q.characteristic;
    if ((c != 2 && c != 3) || q.perfect)
      return make("del_pezzo", BoundKind::Order, 432, "12*36", {cite::kDp432, cite::kDp432Stmt});
    if (c == 2) return make("del_pezzo", BoundKind::Factor, 108, "108", {cite::kDp108, cite::kDpFactor432});
    return make("del_pezzo", BoundKind::Factor, 48, "48", {cite::kDp48, cite::kDpFactor432});
  }
  if (q.characteristic == 0)
    return make("del_pezzo", BoundKind::AtlasValue, 648, "648", {cite::kDp648});
  return make("del_pezzo", BoundKind::AtlasValue, 696729600, "|W(E8)|", {cite::kDpWeyl});
}

BoundResult evalConicBundle(const ConicBundleQuery& q) {
  requireCharacteristic(q.characteristic);
  requireRoots(q.rootsOfUnity, "conic_bundle");
  if (q.m < 0 || q.m > 18) throw OutOfLedger("conic_bundle: m must lie in [0, 18]");
  // In characteristic 2 only the prime-to-2 part is bounded.
  const BoundKind k = q.characteristic == 2 ? BoundKind::Factor : BoundKind::Order;
  return make("conic_bundle", k, 16 * factorial(q.m), "16 m!", {cite::kConic});
}

BoundResult evalBrauerKernel(const BrauerKernelQuery& q) {
  switch (q.surface) {
    case SurfaceKind::ProductWithConic:
      return make("brauer_kernel", BoundKind::AtlasValue, 2, "2", {cite::kBr2});
    case SurfaceKind::SeveriBrauerSurface:
      return make("brauer_kernel", BoundKind::AtlasValue, 3, "3", {cite::kBr3});
    case SurfaceKind::TwoConics:
      return make("brauer_kernel", BoundKind::AtlasValue, 4, "4", {cite::kBr4});
    case SurfaceKind::QuadricPicZ:
      return make("brauer_kernel", BoundKind::AtlasValue, 1, "1", {cite::kBr1});
  }
  throw OutOfLedger("brauer_kernel: unknown surface");
}

const std::string& torsionCitation(const std::vector<int>& primes) {
  if (primes.empty()) return cite::kTpEmpty;
  if (primes.size() == 1) return cite::kTp2;
  if (primes.size() == 2) return cite::kTp23;
  return cite::kTp235;
}

BoundResult evalTorsionPrimes(const TorsionPrimesQuery& q) {
  auto r = make("torsion_primes", BoundKind::Set, std::nullopt, "T(H)", {});
  r.primes = torsionPrimes(q.dynkinType);
  r.citations.push_back(torsionCitation(r.primes));
  return r;
}

BoundResult evalLinearAlgebraic(const LinearAlgebraicQuery& q) {
  requireCharacteristic(q.characteristic);
  if (q.r < 1 || q.n < 1) throw OutOfLedger("linear_algebraic: r and n must be positive");
  auto r = make("linear_algebraic", BoundKind::Symbolic, std::nullopt, "L(r,n): exists, not computed",
                {cite::kLag});
  if (q.pi1Order > 0 && q.characteristic > 0) {
    for (const auto& t : q.dynkinTypes) {
      const auto tp = torsionPrimes(t);
      if (std::find(tp.begin(), tp.end(), q.characteristic) != tp.end())
        throw OutOfLedger("linear_algebraic: characteristic is a torsion prime of " + t);
    }
    const auto [l, m] = splitPrimePart(q.pi1Order, q.characteristic);
    (void)l;
    r.exponent = checkedPow(q.characteristic, m, "linear_algebraic");
    r.citations.push_back(cite::kSbpExp);
  }
  return r;
}

}  // namespace

std::string kindName(BoundKind k) {
  switch (k) {
    case BoundKind::Order: return "order";
    case BoundKind::Factor: return "factor";
    case BoundKind::Structure: return "structure";
    case BoundKind::Unbounded: return "unbounded";
    case BoundKind::AtlasValue: return "atlas_value";
    case BoundKind::Symbolic: return "symbolic";
    case BoundKind::Set: return "set";
    case BoundKind::Contradiction: return "contradiction";
  }
  return "?";
}

std::int64_t upsilonValue(int n) {
  static constexpr std::array<std::int64_t, 3> kValues{2, 12, 48};
  if (n < 1 || n > 3) throw OutOfLedger("Upsilon(n) is tabulated only for n <= 3");
  return kValues[static_cast<std::size_t>(n - 1)];
}

std::vector<int> torsionPrimes(const std::string& type) {
  if (type.size() < 2 || !std::isupper(static_cast<unsigned char>(type[0])))
    throw OutOfLedger("torsion_primes: malformed Dynkin type '" + type + "'");
  const char family = type[0];
  int rank = 0;
  for (std::size_t i = 1; i < type.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(type[i])) || rank > 1000)
      throw OutOfLedger("torsion_primes: malformed Dynkin type '" + type + "'");
    rank = rank * 10 + (type[i] - '0');
  }
  // Low ranks where families coincide (B2 = C2, D3 = A3, ...) are excluded.
  switch (family) {
    case 'A':
      if (rank >= 1) return {};
      break;
    case 'C':
      if (rank >= 2) return {};
      break;
    case 'B':
      if (rank >= 3) return {2};
      break;
    case 'D':
      if (rank >= 4) return {2};
      break;
    case 'G':
      if (rank == 2) return {2};
      break;
    case 'F':
      if (rank == 4) return {2, 3};
      break;
    case 'E':
      if (rank == 6 || rank == 7) return {2, 3};
      if (rank == 8) return {2, 3, 5};
      break;
    default:
      break;
  }
  throw OutOfLedger("torsion_primes: no simple type '" + type + "'");
}

std::pair<std::int64_t, int> splitPrimePart(std::int64_t order, int p) {
  if (order < 1 || p < 2) throw std::invalid_argument("splitPrimePart: need order >= 1 and p >= 2");
  int m = 0;
  while (order % p == 0) {
    order /= p;
    ++m;
  }
  return {order, m};
}

BoundResult evaluate(const BoundQuery& q) {
  return std::visit(
      [](const auto& x) -> BoundResult {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, TorusQuery>) return evalTorus(x);
        else if constexpr (std::is_same_v<T, UpsilonQuery>) return evalUpsilon(x);
        else if constexpr (std::is_same_v<T, SeveriBrauerQuery>) return evalSeveriBrauer(x);
        else if constexpr (std::is_same_v<T, SeveriBrauerPQuery>) return evalSeveriBrauerP(x);
        else if constexpr (std::is_same_v<T, QuadricQuery>) return evalQuadric(x);
        else if constexpr (std::is_same_v<T, DelPezzoQuery>) return evalDelPezzo(x);
        else if constexpr (std::is_same_v<T, ConicBundleQuery>) return evalConicBundle(x);
        else if constexpr (std::is_same_v<T, BrauerKernelQuery>) return evalBrauerKernel(x);
        else if constexpr (std::is_same_v<T, TorsionPrimesQuery>) return evalTorsionPrimes(x);
        else return evalLinearAlgebraic(x);
      },
      q);
}

BoundResult assembleBirBound(const MinimalSurface& s, int characteristic, bool perfect, bool rootsOfUnity) {
  requireCharacteristic(characteristic);
  requireRoots(rootsOfUnity, "assemble");
  BoundResult r;
  if (const auto* dp = std::get_if<DelPezzoSurface>(&s)) {
    const int d = dp->degree;
    if (d < 1 || d > 9) throw OutOfLedger("assemble: del Pezzo degree must lie in [1, 9]");
    if (d == 9) {
      r = characteristic != 3
              ? make("del_pezzo", BoundKind::Order, 81, "3^{2(3-1)}", {cite::kDp81, cite::kSbOrder})
              : make("del_pezzo", BoundKind::Factor, 1, "1", {cite::kDp9Char3, cite::kSbp});
    } else if (d == 8) {
      r = characteristic == 2 && !perfect
              ? make("del_pezzo", BoundKind::Factor, 1, "1", {cite::kDp8Char2})
              : make("del_pezzo", BoundKind::Order, 32, "32", {cite::kDp8});
    } else if (d == 7) {
      r = make("del_pezzo", BoundKind::Contradiction, std::nullopt, "degree 7 does not occur", {cite::kDp7});
    } else {
      r = evaluate(DelPezzoQuery{d, characteristic, perfect, rootsOfUnity});
    }
  } else {
    const int m = std::get<ConicBundleSurface>(s).m;
    if (m < 0 || m > 18) throw OutOfLedger("assemble: m must lie in [0, 18]");
    const bool two = characteristic == 2;
    if (m == 0) {
      r = make("conic_bundle", BoundKind::Contradiction, std::nullopt, "birational to a product", {cite::kConic0});
    } else if (m == 1) {
      r = make("conic_bundle", BoundKind::Contradiction, std::nullopt, "m' = 1 does not occur", {cite::kConic1});
    } else if (m == 2) {
      r = two ? make("conic_bundle", BoundKind::Factor, 1, "1", {cite::kConic2Char2})
              : make("conic_bundle", BoundKind::Order, 16, "16", {cite::kConic2});
    } else {
      r = two ? make("conic_bundle", BoundKind::Factor, factorial(m), "m!", {cite::kConicLargeChar2})
              : make("conic_bundle", BoundKind::Order, 4 * factorial(m), "4 m!", {cite::kConicLarge});
    }
    if (r.kind != BoundKind::Contradiction) r.citations.push_back(cite::kConic);
  }
  r.citations.push_back(cite::kAssembly);
  return r;
}

const std::vector<std::string>& citationTable() {
  static const std::vector<std::string> table{
      cite::kUpsilon,     cite::kTorus,        cite::kSbOrder,      cite::kSb27,          cite::kSbDivision,
      cite::kSbUnbounded, cite::kSbp,          cite::kSbpExp,       cite::kQuadricOdd,    cite::kQuadricEven,
      cite::kQuadric4,    cite::kQuadricPoint, cite::kConicChar2,   cite::kDp432,         cite::kDp432Stmt,
      cite::kDpFactor432, cite::kDp108,        cite::kDp48,         cite::kDp648,         cite::kDpWeyl,
      cite::kDp81,        cite::kDp9Char3,     cite::kDp8,          cite::kDp8Char2,      cite::kDp7,
      cite::kConic,       cite::kConic0,       cite::kConic1,       cite::kConic2,        cite::kConic2Char2,
      cite::kConicLarge,  cite::kConicLargeChar2, cite::kAssembly,  cite::kBr2,           cite::kBr3,
      cite::kBr4,         cite::kBr1,          cite::kTpEmpty,      cite::kTp2,           cite::kTp23,
      cite::kTp235,       cite::kLag,
  };
  return table;
}

std::vector<LedgerRow> ledgerTable() {
  std::vector<LedgerRow> rows;
  auto add = [&](std::string label, BoundQuery q) {
    LedgerRow row{std::move(label), q, std::nullopt, 0, true, evaluate(q)};
    rows.push_back(std::move(row));
  };
  auto assembled = [&](std::string label, MinimalSurface s, int c, bool perfect) {
    LedgerRow row{std::move(label), UpsilonQuery{1}, s, c, perfect, assembleBirBound(s, c, perfect)};
    rows.push_back(std::move(row));
  };
  auto str = [](int v) { return std::to_string(v); };

  for (int n = 1; n <= 3; ++n) add("minkowski_upsilon n=" + str(n), UpsilonQuery{n});
  for (int n = 1; n <= 3; ++n) add("torus n=" + str(n), TorusQuery{n});

  for (int n = 2; n <= 5; ++n) add("severi_brauer n=" + str(n) + " division char 7", SeveriBrauerQuery{n, true, 7});
  add("severi_brauer n=3 division char 0", SeveriBrauerQuery{3, true, 0});
  add("severi_brauer n=3 split char 0", SeveriBrauerQuery{3, false, 0});
  add("severi_brauer_p n'=1 p=2 m=1", SeveriBrauerPQuery{1, 2, 1});
  add("severi_brauer_p n'=3 p=2 m=1", SeveriBrauerPQuery{3, 2, 1});
  add("severi_brauer_p n'=2 p=3 m=1", SeveriBrauerPQuery{2, 3, 1});

  for (int n = 3; n <= 6; ++n) add("quadric n=" + str(n) + " no point char 0", QuadricQuery{n, false, 0});
  add("quadric n=3 with point char 0", QuadricQuery{3, true, 0});
  add("quadric n=3 no point char 2 non-perfect", QuadricQuery{3, false, 2, false});

  add("del_pezzo d=6 char 0", DelPezzoQuery{6, 0, true});
  add("del_pezzo d=6 char 2 non-perfect", DelPezzoQuery{6, 2, false});
  add("del_pezzo d=6 char 3 non-perfect", DelPezzoQuery{6, 3, false});
  add("del_pezzo d=5 char 0", DelPezzoQuery{5, 0, true});
  add("del_pezzo d=5 char 5", DelPezzoQuery{5, 5, true});

  for (int m = 0; m <= 8; ++m) add("conic_bundle m=" + str(m) + " char 0", ConicBundleQuery{m, 0});

  add("brauer_kernel product with a conic", BrauerKernelQuery{SurfaceKind::ProductWithConic});
  add("brauer_kernel Severi-Brauer surface", BrauerKernelQuery{SurfaceKind::SeveriBrauerSurface});
  add("brauer_kernel two conics", BrauerKernelQuery{SurfaceKind::TwoConics});
  add("brauer_kernel quadric Pic=Z", BrauerKernelQuery{SurfaceKind::QuadricPicZ});

  for (const char* t : {"A1", "B3", "C2", "D4", "E6", "E7", "E8", "F4", "G2"})
    add(std::string("torsion_primes ") + t, TorsionPrimesQuery{t});

  add("linear_algebraic r=1 n=1", LinearAlgebraicQuery{1, 1, 0, 0, {}});

  assembled("assemble del_pezzo d=9 char 0", DelPezzoSurface{9}, 0, true);
  assembled("assemble del_pezzo d=9 char 3 non-perfect", DelPezzoSurface{9}, 3, false);
  assembled("assemble del_pezzo d=8 char 0", DelPezzoSurface{8}, 0, true);
  assembled("assemble del_pezzo d=7 char 0", DelPezzoSurface{7}, 0, true);
  assembled("assemble del_pezzo d=6 char 0", DelPezzoSurface{6}, 0, true);
  for (int m = 0; m <= 3; ++m) assembled("assemble conic_bundle m=" + str(m) + " char 0", ConicBundleSurface{m}, 0, true);
  assembled("assemble conic_bundle m=2 char 2", ConicBundleSurface{2}, 2, true);
  return rows;
}

}  // namespace aniso
