#include "acceptance.hpp"

#include "cli.hpp"

#include "aniso/bounds.hpp"
#include "aniso/brauer.hpp"
#include "aniso/exponent_audit.hpp"
#include "aniso/glnz.hpp"
#include "aniso/quadform.hpp"
#include "aniso/torus.hpp"
#include "aniso/weyl.hpp"

#include <chrono>
#include <fstream>
#include <iomanip>
#include <map>
#include <random>
#include <set>
#include <sstream>

#ifndef ANISO_GOLDEN_TABLE
#define ANISO_GOLDEN_TABLE "tests/data/bounds_table.golden.json"
#endif

namespace aniso {
namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::uint64_t matrixOrder(const IntMatrix& a, std::uint64_t limit) {
  const IntMatrix id = identity<Int>(a.rows());
  IntMatrix p = a;
  for (std::uint64_t k = 1; k <= limit; ++k) {
    if (p == id) return k;
    p = p * a;
  }
  return 0;
}

// Shared by criteria 1 and 3.
const std::vector<UpsilonSearchResult>& upsilonRuns() {
  static const std::vector<UpsilonSearchResult> runs = [] {
    std::vector<UpsilonSearchResult> r;
    for (unsigned n = 1; n <= 3; ++n) r.push_back(upsilonSearch(n, 1));
    return r;
  }();
  return runs;
}

IntMatrix minusIdentity(Eigen::Index n) { return IntMatrix(-identity<Int>(n)); }

struct Check {
  bool ok = true;
  std::ostringstream detail;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) detail << "FAILED: " << what << "; ";
    ok = ok && cond;
  }
};

// 1
CriterionResult upsilon() {
  Check c;
  const auto t0 = Clock::now();
  for (unsigned n = 1; n <= 3; ++n) {
    const auto& s = upsilonRuns()[n - 1];
    c.require(static_cast<std::int64_t>(s.maxOrder) == upsilonValue(static_cast<int>(n)),
              "Upsilon(" + std::to_string(n) + ") = " + std::to_string(s.maxOrder));
    c.detail << "Upsilon(" << n << ")=" << s.maxOrder << " ";
  }
  const double secs = since(t0);
  c.require(secs < 60, "runtime over 60 s");
  return {1, "Upsilon reproduction", c.ok, c.detail.str(), 0};
}

// 2
CriterionResult orderSpectrum() {
  Check c;
  const auto t0 = Clock::now();
  const auto mats = finiteOrderMatrices(2, 3);
  std::set<std::uint64_t> orders;
  for (const auto& a : mats) orders.insert(matrixOrder(a, 12));
  c.require(orders == std::set<std::uint64_t>{1, 2, 3, 4, 6}, "order set differs from {1,2,3,4,6}");
  c.require(since(t0) < 60, "runtime over 60 s");
  c.detail << mats.size() << " finite-order matrices, orders {";
  for (auto o : orders) c.detail << o << (o == *orders.rbegin() ? "" : ",");
  c.detail << "}";
  return {2, "GL2(Z) order spectrum", c.ok, c.detail.str(), 0};
}

// 3
CriterionResult minkowski() {
  Check c;
  std::vector<MatrixGroup> groups;
  for (unsigned n = 1; n <= 3; ++n) groups.push_back(closure(upsilonRuns()[n - 1].witnessGenerators, kDefaultClosureCap, n));
  for (const auto& a : finiteOrderMatrices(2, 3)) groups.push_back(closure({a}));
  for (const auto& g : groups)
    for (std::int64_t m : {3, 4, 5}) c.require(minkowskiInjectionCheck(g, m).injective, "reduction mod " + std::to_string(m));
  for (Eigen::Index n = 1; n <= 3; ++n) {
    const auto r = minkowskiInjectionCheck(closure({minusIdentity(n)}), 2);
    c.require(!r.injective && r.witness.has_value(), "mod 2 should identify -I with I");
  }
  c.detail << groups.size() << " groups, m in {3,4,5} injective; mod 2 kills {+-I}";
  return {3, "Minkowski injectivity", c.ok, c.detail.str(), 0};
}

// 4
CriterionResult anisotropicTorsion() {
  Check c;
  std::mt19937_64 rng(20261019);
  const auto pool = finiteOrderMatrices(2, 2);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::uniform_int_distribution<int> count(1, 2);
  std::size_t found = 0, attempts = 0;
  std::uint64_t maxInvariant = 0;
  std::int64_t maxOrder = 0;
  std::set<std::size_t> orders;
  while (found < 200 && attempts < 100000) {
    ++attempts;
    std::vector<IntMatrix> gens;
    for (int k = count(rng); k > 0; --k) gens.push_back(pool[pick(rng)]);
    std::optional<GaloisLattice> l;
    try {
      l.emplace(2, gens);
    } catch (const std::exception&) {
      continue;  // infinite group
    }
    if (!isAnisotropic(*l)) continue;
    ++found;
    orders.insert(l->gamma().order());
    const auto p = torsionProfile(*l, 60, 0);
    maxOrder = std::max(maxOrder, p.maxExactOrder);
    c.require(p.maxExactOrder <= 6, "exact order above 6");
    c.require(p.entries[5 - 2].exactOrderCount == 0, "class of exact order 5");
    for (const auto& e : p.entries) maxInvariant = std::max(maxInvariant, e.invariantCount);
  }
  c.require(found == 200, "only " + std::to_string(found) + " anisotropic samples");
  c.require(maxInvariant <= 36, "invariant classes " + std::to_string(maxInvariant) + " > 36");
  c.detail << found << " groups (" << orders.size() << " distinct orders), max exact order " << maxOrder
           << ", max invariant group " << maxInvariant;
  return {4, "anisotropic rank-2 torsion", c.ok, c.detail.str(), 0};
}

// 5
CriterionResult h1Annihilation() {
  Check c;
  std::map<std::uint64_t, int> perOrder;
  for (const auto& a : finiteOrderMatrices(2, 3)) {
    const auto r = matrixOrder(a, 12);
    if (r < 2) continue;
    const GaloisLattice l(2, {a});
    const auto h = h1Cyclic(l);
    c.require(h.annihilatedByOrder, "r * H1 != 0");
    for (const auto& f : h.cyclicFactors)
      c.require(Int(static_cast<long long>(r)) % f == Int(0), "factor not dividing r");
    ++perOrder[r];
  }
  c.require(perOrder.size() == 4, "not every order in {2,3,4,6} met");
  c.detail << "cyclic actions by order:";
  for (auto [r, k] : perOrder) c.detail << " " << r << ":" << k;
  return {5, "H1 annihilation", c.ok, c.detail.str(), 0};
}

// 6, 7
CriterionResult audit(int id) {
  Check c;
  const auto t0 = Clock::now();
  const bool projective = id == 7;
  std::size_t subgroups = 0, hypothesis = 0;
  for (unsigned p : projective ? std::vector<unsigned>{5, 7} : std::vector<unsigned>{3, 5}) {
    const FiniteField f(p, 1);
    const auto g = projective ? projectiveGeneralLinear(f, 2) : generalLinear(f, 2);
    const auto mode = projective ? AuditMode::Projective : AuditMode::General;
    auto subs = subgroupSweep(g);
    subs.push_back(g);
    for (const auto& h : subs) {
      const auto a = exponentBoundAudit(h, mode);
      ++subgroups;
      hypothesis += a.hypothesisHolds ? 1 : 0;
      c.require(!a.violation(), "violation on a subgroup of order " + std::to_string(a.groupOrder));
    }
  }
  if (!projective) c.require(subgroups >= 500, "sweep below 500 subgroups");
  if (!projective) c.require(since(t0) < 120, "runtime over 120 s");
  c.detail << subgroups << " subgroups audited";
  if (projective) c.detail << ", " << hypothesis << " with every element order prime to p";
  return {id, projective ? "projective exponent audit" : "exponent audit |G|' <= d^n", c.ok, c.detail.str(), 0};
}

std::vector<FqForm> allForms(const FiniteField& f, Eigen::Index n) {
  std::vector<std::pair<Eigen::Index, Eigen::Index>> slots;
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i; j < n; ++j) slots.emplace_back(i, j);
  std::vector<FqForm> out;
  std::vector<FiniteField::Element> digits(slots.size(), 0);
  while (true) {
    FqForm q(f, n);
    for (std::size_t s = 0; s < slots.size(); ++s) q.setCoeff(slots[s].first, slots[s].second, digits[s]);
    out.push_back(q);
    std::size_t s = 0;
    while (s < digits.size() && ++digits[s] == f.order()) digits[s++] = 0;
    if (s == digits.size()) break;
  }
  return out;
}

bool nondegenerate(const FqForm& q) { return fqRank(q.field(), bilinear(q)) == q.dim(); }

// 8
CriterionResult arfSuite() {
  Check c;
  std::mt19937_64 rng(8);
  for (unsigned k : {1u, 2u}) {
    const FiniteField f(2, k);
    std::vector<FqForm> forms;
    for (const auto& q : allForms(f, 2))
      if (nondegenerate(q)) forms.push_back(q);
    std::vector<std::vector<std::size_t>> classes;  // brute-force classes, by index
    for (std::size_t i = 0; i < forms.size(); ++i) {
      bool placed = false;
      for (auto& cls : classes) {
        if (bruteForceEquivalence(forms[cls.front()], forms[i])) {
          cls.push_back(i);
          placed = true;
          break;
        }
      }
      if (!placed) classes.push_back({i});
    }
    c.require(classes.size() == 2, "F_" + std::to_string(f.order()) + ": " + std::to_string(classes.size()) + " classes");
    std::set<FiniteField::Element> cosets;
    for (const auto& cls : classes) {
      const auto rep = arfCanonicalize(forms[cls.front()]).arfClass;
      cosets.insert(rep);
      for (auto i : cls) c.require(arfCanonicalize(forms[i]).arfClass == rep, "class straddles cokernel cosets");
    }
    c.require(cosets.size() == classes.size(), "cokernel classes do not separate");
    for (const auto& q : forms) {
      const auto r = arfCanonicalize(q);
      c.require(transform(q, r.basisChange) == arfCanonicalForm(f, 2, r.a), "round trip");
    }
    c.detail << "F_" << f.order() << ": " << forms.size() << " forms, " << classes.size() << " classes; ";
  }
  const FiniteField f2(2, 1);
  std::size_t dim4 = 0;
  for (const auto& q : allForms(f2, 4)) {
    if (!nondegenerate(q)) continue;
    ++dim4;
    c.require(representsZero(q).has_value(), "anisotropic dim-4 form over F2");
    const auto r = arfCanonicalize(q);
    c.require(transform(q, r.basisChange) == arfCanonicalForm(f2, 4, r.a), "dim-4 round trip");
  }
  const FiniteField f4(2, 2);
  std::uniform_int_distribution<FiniteField::Element> e(0, 3);
  for (int s = 0; s < 300; ++s) {
    FqForm q(f4, 4);
    for (Eigen::Index i = 0; i < 4; ++i)
      for (Eigen::Index j = i; j < 4; ++j) q.setCoeff(i, j, e(rng));
    if (!nondegenerate(q)) continue;
    const auto r = arfCanonicalize(q);
    c.require(transform(q, r.basisChange) == arfCanonicalForm(f4, 4, r.a), "F4 dim-4 round trip");
  }
  c.detail << dim4 << " nondegenerate dim-4 forms over F2 all isotropic";
  return {8, "Arf suite", c.ok, c.detail.str(), 0};
}

// 9
CriterionResult reflections() {
  Check c;
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<long long> num(-5, 5), den(1, 4);
  std::uniform_int_distribution<int> dimPick(2, 4);
  int done = 0;
  while (done < 100) {
    const Eigen::Index n = dimPick(rng);
    RatForm q(RationalField{}, n);
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = i; j < n; ++j) q.setCoeff(i, j, Rational(Int(num(rng)), Int(den(rng))));
    RatVector v(n);
    for (Eigen::Index i = 0; i < n; ++i) v(i) = Rational(Int(num(rng)), Int(den(rng)));
    if (q(v) == Rational(0)) continue;
    const RatMatrix f = reflection(q, v);
    c.require(RatMatrix(f * f) == identity<Rational>(n), "f^2 = I");
    c.require(transform(q, f) == q, "q o f = q");
    c.require(RatVector(f * v) == RatVector(-v), "f(v) = -v");
    ++done;
  }
  c.detail << done << " random (q, v) over Q in dims 2-4";
  return {9, "reflection identities", c.ok, c.detail.str(), 0};
}

// 10
CriterionResult orderP() {
  Check c;
  for (unsigned p : {3u, 5u, 7u}) {
    const FiniteField f(p, 1);
    std::size_t anisotropic = 0;
    std::set<std::uint64_t> orders;
    for (const auto& q : allForms(f, 2)) {
      if (!nondegenerate(q) || representsZero(q)) continue;
      ++anisotropic;
      const auto r = orderPScan(q);
      c.require(!r.hasOrderP, "element of order p over F_" + std::to_string(p));
      orders.insert(r.groupOrder);
    }
    c.require(anisotropic > 0, "no anisotropic forms found");
    c.detail << "F_" << p << ": " << anisotropic << " forms, |O| = " << *orders.begin() << "; ";
  }
  return {10, "order-p exclusion", c.ok, c.detail.str(), 0};
}

// 11
CriterionResult weyl() {
  Check c;
  const auto t0 = Clock::now();
  for (unsigned p : {2u, 3u, 5u}) {
    c.require(weylIdentityCheck(p).holds(), "(uv)^p - uv - u^p v^p != 0 at p = " + std::to_string(p));
    const auto ad = adSolve(p);
    c.require(ad.nilpotencyIndex <= p && ad.verified, "(ad v)^p != 0 or no preimage of 1");
    c.detail << "p=" << p << " nilpotency " << ad.nilpotencyIndex << "; ";
  }
  c.require(since(t0) < 10, "runtime over 10 s");
  return {11, "Weyl identities", c.ok, c.detail.str(), 0};
}

// 12
CriterionResult residueCalculus() {
  Check c;
  std::mt19937_64 rng(12);
  for (auto [p, k] : {std::pair{2u, 1u}, std::pair{2u, 2u}, std::pair{3u, 1u}}) {
    const FiniteField f(p, k);
    std::vector<ProjectivePoint> all{ProjectivePoint{std::nullopt}};
    for (FiniteField::Element a = 0; a < f.order(); ++a) all.push_back(ProjectivePoint{a});
    std::uniform_int_distribution<FiniteField::Element> elem(0, f.order() - 1);
    std::uniform_int_distribution<std::int64_t> mult(-4, 4);
    for (int s = 0; s < 100; ++s) {
      std::vector<ProjectivePoint> pts = all;
      std::shuffle(pts.begin(), pts.end(), rng);
      pts.resize(std::uniform_int_distribution<std::size_t>(2, all.size())(rng));
      FactoredFunction fn{pts, std::vector<std::int64_t>(pts.size(), 0)};
      std::int64_t sum = 0;
      for (std::size_t i = 0; i + 1 < pts.size(); ++i) sum += fn.multiplicities[i] = mult(rng);
      fn.multiplicities.back() = -sum;
      const auto r = residues(f, fn, elem(rng));
      c.require(r.rawSum == 0, "nonzero residue sum over F_" + std::to_string(f.order()));
    }
  }
  {
    const FiniteField f4(2, 2);
    std::vector<ProjectivePoint> d4{{0u}, {1u}, {2u}, {std::nullopt}};
    c.require(std::holds_alternative<AdmissibleForm>(admissibleForm(f4, d4)), "|Delta| = 4 over F4 not admissible");
    const FiniteField f2(2, 1);
    std::vector<ProjectivePoint> d3{{0u}, {1u}, {std::nullopt}};
    c.require(std::holds_alternative<Obstruction>(admissibleForm(f2, d3)), "|Delta| = 3 over F2 not obstructed");
  }
  std::size_t checked = 0;
  for (unsigned k : {1u, 2u, 3u}) {
    const FiniteField f(2, k);
    const auto coker = asCokernel(f);
    for (FiniteField::Element a = 0; a < f.order(); ++a, ++checked) {
      const bool noPoint = conicChar2Class(f, a).cls == ConicClass::NoPoint;
      c.require(noPoint == !coker.inImage(a), "conic class disagrees with the cokernel");
    }
  }
  c.detail << "300 principal divisors; Delta parity; " << checked << " conic classes";
  return {12, "residue calculus", c.ok, c.detail.str(), 0};
}

// 13
CriterionResult boundsGolden() {
  Check c;
  std::ifstream in(ANISO_GOLDEN_TABLE, std::ios::binary);
  c.require(static_cast<bool>(in), std::string("missing golden file ") + ANISO_GOLDEN_TABLE);
  std::ostringstream golden;
  golden << in.rdbuf();
  const std::string produced = boundsTableReport(true);
  c.require(golden.str() == produced, "bounds --table --stable differs from the golden file");
  c.detail << ledgerTable().size() << " ledger rows, " << produced.size() << " bytes";
  return {13, "bounds ledger golden file", c.ok, c.detail.str(), 0};
}

}  // namespace

CriterionResult runCriterion(int id) {
  const auto t0 = Clock::now();
  CriterionResult r;
  try {
    switch (id) {
      case 1: r = upsilon(); break;
      case 2: r = orderSpectrum(); break;
      case 3: r = minkowski(); break;
      case 4: r = anisotropicTorsion(); break;
      case 5: r = h1Annihilation(); break;
      case 6: r = audit(6); break;
      case 7: r = audit(7); break;
      case 8: r = arfSuite(); break;
      case 9: r = reflections(); break;
      case 10: r = orderP(); break;
      case 11: r = weyl(); break;
      case 12: r = residueCalculus(); break;
      case 13: r = boundsGolden(); break;
      default: throw std::out_of_range("no acceptance criterion " + std::to_string(id));
    }
  } catch (const std::out_of_range&) {
    throw;
  } catch (const std::exception& e) {
    r = {id, "criterion " + std::to_string(id), false, std::string("exception: ") + e.what(), 0};
  }
  r.seconds = since(t0);
  return r;
}

std::vector<CriterionResult> runAcceptance(const std::vector<int>& ids,
                                           const std::function<void(const CriterionResult&)>& onResult) {
  std::vector<int> todo = ids;
  if (todo.empty())
    for (int i = 1; i <= kCriterionCount; ++i) todo.push_back(i);
  std::vector<CriterionResult> out;
  for (int id : todo) {
    out.push_back(runCriterion(id));
    if (onResult) onResult(out.back());
  }
  return out;
}

std::string formatResultLine(const CriterionResult& r) {
  std::ostringstream s;
  s << (r.passed ? "PASS" : "FAIL") << " " << std::setw(2) << r.id << " " << std::left << std::setw(30) << r.name
    << std::right << " (" << std::fixed << std::setprecision(2) << r.seconds << " s)  " << r.detail;
  return s.str();
}

}  // namespace aniso
