#include "cli.hpp"

#include "acceptance.hpp"

#include "aniso/bounds.hpp"
#include "aniso/brauer.hpp"
#include "aniso/cyclotomic.hpp"
#include "aniso/exponent_audit.hpp"
#include "aniso/glnz.hpp"
#include "aniso/io.hpp"
#include "aniso/quadform.hpp"
#include "aniso/torus.hpp"
#include "aniso/weyl.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <iostream>
#include <optional>

namespace aniso {
namespace {

struct Report {
  std::string subcommand;
  Json inputs = Json::object();
  Json results = Json::object();
  Json checks = Json::array();
  bool allPassed = true;

  void check(const std::string& name, bool ok) {
    checks.push_back({{"name", name}, {"passed", ok}});
    allPassed = allPassed && ok;
  }

  [[nodiscard]] std::string render(bool stable, double ms) const {
    std::size_t passed = 0;
    for (const auto& c : checks) passed += c.at("passed").get<bool>() ? 1 : 0;
    Json j{{"subcommand", subcommand},
           {"inputs", inputs},
           {"results", results},
           {"checks", {{"passed", passed}, {"failed", checks.size() - passed}, {"list", checks}}}};
    if (!stable) j["wall_time_ms"] = ms;
    return j.dump(2) + "\n";
  }
};

// ---- glnz

Report glnzUpsilon(unsigned n, int bound, std::size_t cap) {
  Report r{"glnz"};
  r.inputs = {{"upsilon", n}, {"bound", bound}, {"cap", cap}};
  if (n < 1 || bound < 1) throw InputError("--upsilon needs n >= 1 and --bound >= 1");
  if (n > 3) {
    // Only the reduction-mod-3 bound is offered beyond rank 3.
    r.results = {{"upsilon", nullptr}, {"mod3_upper_bound", generalLinearOrder(3, n)}};
    return r;
  }
  const auto s = upsilonSearch(n, bound, cap, configuredThreads());
  Json wit = Json::array();
  for (const auto& g : s.witnessGenerators) wit.push_back(toJson(g));
  r.results = {{"upsilon", s.maxOrder},
               {"witness_generators", wit},
               {"finite_order_matrices", s.finiteOrderMatrices},
               {"closures_computed", s.closuresComputed},
               {"closures_skipped", s.closuresSkipped},
               {"mod3_upper_bound", s.mod3UpperBound}};
  r.check("matches Upsilon(" + std::to_string(n) + ") = " + std::to_string(upsilonValue(static_cast<int>(n))),
          static_cast<std::int64_t>(s.maxOrder) == upsilonValue(static_cast<int>(n)));
  r.check("below |GL_n(F_3)|", s.maxOrder <= s.mod3UpperBound);
  return r;
}

MatrixGroup loadGroup(const std::string& path, std::size_t cap, Json& inputs) {
  const Json j = loadJsonFile(path);
  const auto g = generatorsFromJson(j, "n");
  inputs["group"] = j;
  try {
    return closure(g.generators, cap, g.n);
  } catch (const InfiniteOrderGenerator& e) {
    throw InputError(e.what());
  } catch (const CapExceeded& e) {
    throw InputError(e.what());
  }
}

Report glnzClosure(const std::string& path, std::size_t cap) {
  Report r{"glnz"};
  const auto g = loadGroup(path, cap, r.inputs);
  Json elems = Json::array();
  for (const auto& e : g.elements()) elems.push_back(toJson(e));
  r.results = {{"order", g.order()}, {"elements", elems}};
  return r;
}

Report glnzMinkowski(const std::string& path, std::int64_t m, std::size_t cap) {
  Report r{"glnz"};
  if (m < 2) throw InputError("-m must be at least 2");
  const auto g = loadGroup(path, cap, r.inputs);
  r.inputs["m"] = m;
  const auto res = minkowskiInjectionCheck(g, m);
  r.results = {{"order", g.order()}, {"injective", res.injective}, {"image_size", res.imageSize}};
  r.results["witness"] = res.witness ? toJson(*res.witness) : Json(nullptr);
  if (m > 2) r.check("reduction mod m > 2 is injective", res.injective);
  return r;
}

// ---- torus

GaloisLattice loadLattice(const std::string& path, Json& inputs) {
  const Json j = loadJsonFile(path);
  const auto g = generatorsFromJson(j, "rank");
  inputs["lattice"] = j;
  try {
    return GaloisLattice(g.n, g.generators);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

Report torusProfile(const std::string& path, std::int64_t dMax, unsigned characteristic) {
  Report r{"torus"};
  const auto l = loadLattice(path, r.inputs);
  r.inputs["dmax"] = dMax;
  r.inputs["char"] = characteristic;
  if (dMax < 2 || dMax > 60) throw InputError("--dmax must lie in [2, 60]");
  if (characteristic != 0 && !isPrime(characteristic)) throw InputError("--char must be 0 or prime");
  const auto p = torsionProfile(l, dMax, characteristic);
  Json entries = Json::array();
  std::uint64_t maxInvariant = 0;
  for (const auto& e : p.entries) {
    entries.push_back({{"d", e.d},
                       {"exact_order_count", e.exactOrderCount},
                       {"invariant_count", e.invariantCount},
                       {"characteristic_divides", e.characteristicDivides}});
    maxInvariant = std::max(maxInvariant, e.invariantCount);
  }
  const bool aniso = isAnisotropic(l);
  r.results = {{"anisotropic", aniso}, {"group_order", l.gamma().order()}, {"max_exact_order", p.maxExactOrder},
               {"entries", entries}};
  if (aniso && l.rank() == 2) {
    r.check("max exact order <= 6", p.maxExactOrder <= 6);
    r.check("no class of exact order 5", dMax < 5 || p.entries[5 - 2].exactOrderCount == 0);
    r.check("invariant classes <= 36", maxInvariant <= 36);
  }
  return r;
}

Report torusAnisotropic(const std::string& path) {
  Report r{"torus"};
  const auto l = loadLattice(path, r.inputs);
  r.results = {{"anisotropic", isAnisotropic(l)}, {"group_order", l.gamma().order()}};
  return r;
}

Report torusH1(const std::string& path) {
  Report r{"torus"};
  const auto l = loadLattice(path, r.inputs);
  H1Result h;
  try {
    h = h1Cyclic(l);
  } catch (const NotCyclic& e) {
    throw InputError(e.what());
  }
  Json factors = Json::array();
  for (const auto& f : h.cyclicFactors) factors.push_back(f.toInt64());
  r.results = {{"group_order", h.groupOrder}, {"sigma", toJson(h.sigma)}, {"cyclic_factors", factors},
               {"size", h.size().toInt64()}};
  r.check("|Gamma| annihilates H1", h.annihilatedByOrder);
  return r;
}

// ---- quadform

template <typename Form>
Json vectorJson(const Form& q, const Vector<typename Form::Element>& v) {
  Json a = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(q.field().format(v(i)));
  return a;
}

template <typename Form>
Json matrixJson(const Form& q, const Matrix<typename Form::Element>& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) rows.push_back(vectorJson(q, Vector<typename Form::Element>(m.row(i).transpose())));
  return rows;
}

FqForm requireFinite(const AnyForm& f, const char* what) {
  if (const auto* q = std::get_if<FqForm>(&f)) return *q;
  throw InputError(std::string(what) + " needs a finite field");
}

Report quadIsotropy(const std::string& path) {
  Report r{"quadform"};
  const Json j = loadJsonFile(path);
  r.inputs["form"] = j;
  const FqForm q = requireFinite(formFromJson(j), "--isotropy");
  std::optional<FqVector> v;
  try {
    v = representsZero(q);
  } catch (const SearchSpaceTooLarge& e) {
    throw InputError(e.what());
  }
  r.results = {{"isotropic", v.has_value()}};
  r.results["vector"] = v ? vectorJson(q, *v) : Json(nullptr);
  if (v) r.check("q(v) = 0", q(*v) == 0);
  return r;
}

Report quadArf(const std::string& path) {
  Report r{"quadform"};
  const Json j = loadJsonFile(path);
  r.inputs["form"] = j;
  const FqForm q = requireFinite(formFromJson(j), "--arf");
  if (q.field().characteristic() != 2) throw InputError("--arf needs characteristic 2");
  ArfResult a;
  try {
    a = arfCanonicalize(q);
  } catch (const std::domain_error& e) {
    throw InputError(e.what());
  }
  const auto& f = q.field();
  const FqForm canon = arfCanonicalForm(f, q.dim(), a.a);
  r.results = {{"a", f.format(a.a)},
               {"arf_class", f.format(a.arfClass)},
               {"basis_change", matrixJson(q, a.basisChange)},
               {"canonical", toJson(canon)}};
  r.check("q(Mx) equals the canonical form", transform(q, a.basisChange) == canon);
  return r;
}

template <typename Form>
void reflectInto(Report& r, const Form& q, const std::vector<std::string>& axis) {
  using El = typename Form::Element;
  if (static_cast<Eigen::Index>(axis.size()) != q.dim()) throw InputError("--axis length must equal dim");
  Vector<El> v(q.dim());
  for (Eigen::Index i = 0; i < q.dim(); ++i) {
    try {
      v(i) = q.field().parse(axis[static_cast<std::size_t>(i)]);
    } catch (const std::exception& e) {
      throw InputError(std::string("bad axis entry: ") + e.what());
    }
  }
  Matrix<El> f;
  try {
    f = reflection(q, v);
  } catch (const std::domain_error& e) {
    throw InputError(e.what());
  }
  const auto& fld = q.field();
  Vector<El> fv(q.dim()), minusV(q.dim());
  for (Eigen::Index i = 0; i < q.dim(); ++i) {
    El s = fld.fromInt(0);
    for (Eigen::Index k = 0; k < q.dim(); ++k) s = fld.add(s, fld.mul(f(i, k), v(k)));
    fv(i) = s;
    minusV(i) = fld.neg(v(i));
  }
  Matrix<El> id(q.dim(), q.dim());
  for (Eigen::Index i = 0; i < q.dim(); ++i)
    for (Eigen::Index k = 0; k < q.dim(); ++k) id(i, k) = fld.fromInt(i == k ? 1 : 0);
  r.results = {{"reflection", matrixJson(q, f)}, {"q_of_axis", fld.format(q(v))}};
  r.check("f^2 = I", matMul(fld, f, f) == id);
  r.check("q(f x) = q(x)", transform(q, f) == q);
  r.check("f(v) = -v", fv == minusV);
}

Report quadReflect(const std::string& path, const std::string& axisText) {
  Report r{"quadform"};
  const Json j = loadJsonFile(path);
  Json axis;
  try {
    axis = Json::parse(axisText);
  } catch (const Json::parse_error&) {
    throw InputError("--axis must be a JSON array such as \"[1,0]\"");
  }
  if (!axis.is_array()) throw InputError("--axis must be a JSON array");
  std::vector<std::string> entries;
  for (const auto& a : axis) entries.push_back(a.is_string() ? a.get<std::string>() : a.dump());
  r.inputs = {{"form", j}, {"axis", axis}};
  std::visit([&](const auto& q) { reflectInto(r, q, entries); }, formFromJson(j));
  return r;
}

// ---- csa

unsigned weylPrime(int p) {
  if (p != 2 && p != 3 && p != 5 && p != 7) throw InputError("p must be 2, 3, 5 or 7");
  return static_cast<unsigned>(p);
}

Report csaWeyl(int pIn) {
  Report r{"csa"};
  const unsigned p = weylPrime(pIn);
  r.inputs["weyl_identity"] = p;
  const auto w = weylIdentityCheck(p);
  const auto ad = adSolve(p);
  r.results = {{"difference", w.difference.str()},
               {"ad_v_nilpotency_index", ad.nilpotencyIndex},
               {"ad_v_preimage_of_1", ad.preimage.str()}};
  r.check("(uv)^p - uv - u^p v^p = 0", w.holds());
  r.check("(ad v)^p = 0", ad.nilpotencyIndex <= p);
  r.check("[v, w] = 1 for the returned w", ad.verified);
  return r;
}

Json auditJson(const ExponentAudit& a) {
  return {{"group_order", a.groupOrder}, {"group_order_prime", a.groupOrderPrime}, {"n_prime", a.nPrime},
          {"d", a.d}, {"bound", a.bound.toInt64()}, {"compared", a.compared},
          {"hypothesis_holds", a.hypothesisHolds}, {"holds", a.holds}, {"slack", a.slack().toInt64()}};
}

Report csaAudit(const std::string& path, const std::string& mode, bool sweep) {
  Report r{"csa"};
  const Json j = loadJsonFile(path);
  r.inputs = {{"audit", j}, {"mode", mode}, {"sweep", sweep}};
  if (mode != "general" && mode != "projective") throw InputError("--mode must be general or projective");
  const bool projective = mode == "projective";
  const FiniteField f = fieldFromJson(j.contains("field") ? j.at("field") : j);
  const Eigen::Index n = j.contains("n") ? j.at("n").get<Eigen::Index>() : 2;
  if (n < 1 || n > 3) throw InputError("n must lie in [1, 3]");
  std::optional<FiniteMatrixGroup> g;
  try {
    if (j.contains("generators")) {
      std::vector<FqMatrix> gens;
      for (const auto& m : j.at("generators")) {
        gens.push_back(fqMatrixFromJson(f, m));
        if (gens.back().rows() != n) throw InputError("generator size does not match n");
        if (fqDet(f, gens.back()) == 0) throw InputError("generator is singular");
      }
      g = finiteClosure(f, n, gens, projective);
    } else {
      g = projective ? projectiveGeneralLinear(f, n) : generalLinear(f, n);
    }
  } catch (const GroupTooLarge& e) {
    throw InputError(e.what());
  }
  const auto mainMode = projective ? AuditMode::Projective : AuditMode::General;
  const auto a = exponentBoundAudit(*g, mainMode);
  r.results = {{"group", auditJson(a)}};
  r.check("no violation on G", !a.violation());
  if (sweep) {
    std::size_t count = 0, violations = 0;
    for (const auto& h : subgroupSweep(*g)) {
      ++count;
      violations += exponentBoundAudit(h, mainMode).violation() ? 1 : 0;
    }
    r.results["sweep"] = {{"subgroups", count}, {"violations", violations}};
    r.check("no violation over the subgroup sweep", violations == 0);
  }
  return r;
}

Report csaMinpoly(const std::string& path, unsigned conductor) {
  Report r{"csa"};
  const Json j = loadJsonFile(path);
  r.inputs = {{"matrix", j}, {"N", conductor}};
  if (conductor < 1 || conductor > 24) throw InputError("-N must lie in [1, 24]");
  const CyclotomicField k(conductor);
  const CycMatrix m = cycMatrixFromJson(k, j);
  MinpolyReport rep;
  try {
    rep = minpolyStructure(k, m);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  Json minpoly = Json::array(), factors = Json::array();
  for (const auto& c : rep.minpoly) minpoly.push_back(k.format(c));
  for (const auto& f : rep.factors) factors.push_back({{"b", k.format(f.b)}, {"irreducible", f.irreducible}});
  r.results = {{"scalar_power", rep.scalarPower}, {"scalar", k.format(rep.scalar)}, {"minpoly", minpoly},
               {"r", rep.r}, {"factors", factors}, {"may_change_with_larger_N", rep.mayChangeWithLargerN}};
  if (rep.r > 0) {
    r.check("product of factors equals the minimal polynomial", rep.productMatches);
    r.check("r divides m", rep.scalarPower % rep.r == 0);
  }
  return r;
}

// ---- brauer

Report brauerCoker(int p, int k) {
  Report r{"brauer"};
  r.inputs = {{"p", p}, {"k", k}};
  const FiniteField f = fieldFromJson(Json{{"p", p}, {"k", k}});
  const auto c = asCokernel(f);
  Json reps = Json::array();
  for (auto e : c.reps) reps.push_back(f.format(e));
  r.results = {{"order", c.order()}, {"representatives", reps}, {"image_size", c.image.size()}};
  r.check("|coker| = p", c.order() == f.characteristic());
  return r;
}

Report brauerAdmissible(const std::string& path) {
  Report r{"brauer"};
  const Json j = loadJsonFile(path);
  r.inputs["delta"] = j;
  const auto d = deltaFromJson(j);
  const auto res = admissibleForm(d.field, d.points);
  if (const auto* ob = std::get_if<Obstruction>(&res)) {
    r.results = {{"admissible", false}, {"obstruction", ob->reason}};
    return r;
  }
  const auto& a = std::get<AdmissibleForm>(res);
  const auto& f = d.field;
  const auto data = residues(f, a.function, a.t);
  Json pts = Json::array(), res_ = Json::array();
  for (std::size_t i = 0; i < a.function.points.size(); ++i)
    pts.push_back({{"point", formatPoint(f, a.function.points[i])}, {"multiplicity", a.function.multiplicities[i]}});
  for (const auto& pr : data.residues)
    res_.push_back({{"point", formatPoint(f, pr.point)}, {"residue", f.format(pr.value)},
                    {"class", f.format(pr.representative)}});
  r.results = {{"admissible", true}, {"t", f.format(a.t)}, {"function", pts}, {"residues", res_},
               {"raw_sum", f.format(data.rawSum)}};
  r.check("residues sum to zero", data.rawSum == 0);
  bool allNonzero = true;
  for (const auto& pr : data.residues) allNonzero = allNonzero && pr.representative != 0;
  r.check("every residue is outside the image of theta", allNonzero);
  return r;
}

Report brauerConic(const std::vector<std::string>& args) {
  Report r{"brauer"};
  const Json j = loadJsonFile(args.at(1));
  const FiniteField f = fieldFromJson(j.contains("field") ? j.at("field") : j);
  r.inputs = {{"a", args.at(0)}, {"field", toJson(f)}};
  if (f.characteristic() != 2) throw InputError("--conic-class needs characteristic 2");
  FiniteField::Element a = 0;
  try {
    a = f.parse(args.at(0));
  } catch (const std::exception& e) {
    throw InputError(std::string("bad element: ") + e.what());
  }
  const auto c = conicChar2Class(f, a);
  r.results = {{"class", c.cls == ConicClass::NoPoint ? "no_point" : "splits"}};
  r.results["root"] = c.root ? Json(f.format(*c.root)) : Json(nullptr);
  r.check("class agrees with the Artin-Schreier cokernel", (c.cls == ConicClass::NoPoint) == !asCokernel(f).inImage(a));
  if (c.root) r.check("h^2 - h = a at the root", f.sub(f.mul(*c.root, *c.root), *c.root) == a);
  return r;
}

// ---- bounds

struct BoundsArgs {
  std::string caseName;
  std::optional<int> n, degree, m, nPrime, p, r;
  int characteristic = 0;
  bool nonPerfect = false, split = false, hasPoint = false, noRoots = false, assemble = false;
  std::string surface, type;
  std::int64_t pi1 = 0;
};

int need(const std::optional<int>& v, const char* flag) {
  if (!v) throw InputError(std::string("this case needs ") + flag);
  return *v;
}

SurfaceKind surfaceKind(const std::string& s) {
  if (s == "product_with_conic") return SurfaceKind::ProductWithConic;
  if (s == "severi_brauer_surface") return SurfaceKind::SeveriBrauerSurface;
  if (s == "two_conics") return SurfaceKind::TwoConics;
  if (s == "quadric_pic_z") return SurfaceKind::QuadricPicZ;
  throw InputError("--surface must be product_with_conic, severi_brauer_surface, two_conics or quadric_pic_z");
}

Report boundsCase(const BoundsArgs& a) {
  Report rep{"bounds"};
  Json in{{"case", a.caseName}, {"char", a.characteristic}, {"perfect", !a.nonPerfect}};
  auto put = [&](const char* k, const std::optional<int>& v) {
    if (v) in[k] = *v;
  };
  put("n", a.n);
  put("degree", a.degree);
  put("m", a.m);
  put("n_prime", a.nPrime);
  put("p", a.p);
  put("r", a.r);
  if (!a.surface.empty()) in["surface"] = a.surface;
  if (!a.type.empty()) in["type"] = a.type;
  if (a.split) in["division"] = false;
  if (a.hasPoint) in["has_point"] = true;
  if (a.noRoots) in["roots_of_unity"] = false;
  if (a.assemble) in["assemble"] = true;
  if (a.pi1) in["pi1"] = a.pi1;
  rep.inputs = in;

  const bool perfect = !a.nonPerfect, roots = !a.noRoots;
  const int c = a.characteristic;
  BoundResult res;
  const std::string& k = a.caseName;
  if (a.assemble) {
    if (k == "del_pezzo") res = assembleBirBound(DelPezzoSurface{need(a.degree, "--degree")}, c, perfect, roots);
    else if (k == "conic_bundle") res = assembleBirBound(ConicBundleSurface{need(a.m, "--m")}, c, perfect, roots);
    else throw InputError("--assemble applies to del_pezzo and conic_bundle");
  } else if (k == "torus") {
    res = evaluate(TorusQuery{need(a.n, "--n")});
  } else if (k == "minkowski_upsilon") {
    res = evaluate(UpsilonQuery{need(a.n, "--n")});
  } else if (k == "severi_brauer") {
    res = evaluate(SeveriBrauerQuery{need(a.n, "--n"), !a.split, c, roots});
  } else if (k == "severi_brauer_p") {
    res = evaluate(SeveriBrauerPQuery{need(a.nPrime, "--n-prime"), need(a.p, "--p"), need(a.m, "--m"), roots});
  } else if (k == "quadric") {
    res = evaluate(QuadricQuery{need(a.n, "--n"), a.hasPoint, c, perfect, roots});
  } else if (k == "del_pezzo") {
    res = evaluate(DelPezzoQuery{need(a.degree, "--degree"), c, perfect, roots});
  } else if (k == "conic_bundle") {
    res = evaluate(ConicBundleQuery{need(a.m, "--m"), c, roots});
  } else if (k == "brauer_kernel") {
    res = evaluate(BrauerKernelQuery{surfaceKind(a.surface)});
  } else if (k == "torsion_primes") {
    res = evaluate(TorsionPrimesQuery{a.type});
  } else if (k == "linear_algebraic") {
    std::vector<std::string> types;
    if (!a.type.empty()) types.push_back(a.type);
    res = evaluate(LinearAlgebraicQuery{need(a.r, "--r"), need(a.n, "--n"), c, a.pi1, types});
  } else {
    throw InputError("unknown --case " + k);
  }
  rep.results = toJson(res);
  const auto& table = citationTable();
  bool cited = !res.citations.empty();
  for (const auto& ci : res.citations) cited = cited && std::find(table.begin(), table.end(), ci) != table.end();
  rep.check("citations present in the ledger table", cited);
  return rep;
}

Report boundsTable() {
  Report rep{"bounds"};
  rep.inputs = {{"table", true}};
  Json rows = Json::array();
  const auto& table = citationTable();
  bool cited = true;
  for (const auto& row : ledgerTable()) {
    rows.push_back({{"label", row.label}, {"result", toJson(row.result)}});
    for (const auto& ci : row.result.citations) cited = cited && std::find(table.begin(), table.end(), ci) != table.end();
  }
  rep.results = {{"rows", rows}};
  rep.check("citations present in the ledger table", cited);
  return rep;
}

// ---- verify-all

Report verifyAll(const std::vector<int>& only, bool stable, std::ostream& err) {
  Report rep{"verify-all"};
  rep.inputs = {{"only", only}};
  Json rows = Json::array();
  for (const auto& c : runAcceptance(only, [&](const CriterionResult& c) { err << formatResultLine(c) << "\n"; })) {
    Json row{{"id", c.id}, {"name", c.name}, {"passed", c.passed}, {"detail", c.detail}};
    if (!stable) row["seconds"] = c.seconds;
    rows.push_back(row);
    rep.check(std::to_string(c.id) + " " + c.name, c.passed);
  }
  rep.results = {{"criteria", rows}};
  return rep;
}

// Collapses a multi-line message to one diagnostic line.
std::string oneLine(std::string s) {
  std::replace(s.begin(), s.end(), '\n', ' ');
  return s;
}

}  // namespace

std::string boundsTableReport(bool stable) { return boundsTable().render(stable, 0); }

int runCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact algebra toolkit for anisotropic groups and automorphism bounds", "aniso"};
  app.require_subcommand(1);
  bool stable = false;
  app.add_flag("--stable", stable, "omit wall time from the report");
  app.fallthrough();

  auto* glnz = app.add_subcommand("glnz", "finite subgroups of GL_n(Z)");
  std::optional<unsigned> upsilonN;
  int entryBound = 1;
  std::size_t cap = kDefaultClosureCap;
  std::string closurePath, minkowskiPath;
  std::int64_t modulus = 3;
  auto* gOpts = glnz->add_option_group("action");
  gOpts->add_option("--upsilon", upsilonN, "largest finite subgroup found with entries in [-B, B]");
  gOpts->add_option("--closure", closurePath, "group JSON {\"n\", \"generators\"}");
  gOpts->add_option("--minkowski", minkowskiPath, "group JSON; checks reduction mod m");
  gOpts->require_option(1);
  glnz->add_option("--bound", entryBound, "entry bound B for --upsilon");
  glnz->add_option("--cap", cap, "closure size cap");
  glnz->add_option("-m", modulus, "modulus for --minkowski");

  auto* torus = app.add_subcommand("torus", "tori as Galois lattices");
  std::string profilePath, anisoPath, h1Path;
  std::int64_t dMax = kDefaultTorsionScan;
  unsigned torusChar = 0;
  auto* tOpts = torus->add_option_group("action");
  tOpts->add_option("--profile", profilePath, "lattice JSON {\"rank\", \"generators\"}");
  tOpts->add_option("--anisotropic", anisoPath, "lattice JSON");
  tOpts->add_option("--h1", h1Path, "lattice JSON with cyclic Gamma");
  tOpts->require_option(1);
  torus->add_option("--dmax", dMax, "largest d scanned");
  torus->add_option("--char", torusChar, "field characteristic (metadata)");

  auto* quad = app.add_subcommand("quadform", "quadratic forms");
  std::string isoPath, arfPath, reflectPath, axis;
  auto* qOpts = quad->add_option_group("action");
  qOpts->add_option("--isotropy", isoPath, "form JSON");
  qOpts->add_option("--arf", arfPath, "form JSON over F_{2^k}");
  qOpts->add_option("--reflect", reflectPath, "form JSON over Q or odd characteristic");
  qOpts->require_option(1);
  quad->add_option("--axis", axis, "axis vector for --reflect, e.g. \"[1,0]\"");

  auto* csa = app.add_subcommand("csa", "central simple algebra mechanics");
  std::optional<int> weylP;
  std::string auditPath, minpolyPath, auditMode = "general";
  unsigned conductor = 1;
  bool sweep = false;
  auto* cOpts = csa->add_option_group("action");
  cOpts->add_option("--weyl-identity", weylP, "prime p");
  cOpts->add_option("--audit", auditPath, "JSON {\"field\", \"n\", optional \"generators\"}");
  cOpts->add_option("--minpoly", minpolyPath, "matrix JSON over Q(zeta_N)");
  cOpts->require_option(1);
  csa->add_option("--mode", auditMode, "general or projective");
  csa->add_flag("--sweep", sweep, "also audit the subgroup sweep");
  csa->add_option("-N", conductor, "conductor N <= 24");

  auto* brauer = app.add_subcommand("brauer", "Artin-Schreier residues");
  std::vector<int> coker;
  std::string admissiblePath;
  std::vector<std::string> conic;
  auto* bOpts = brauer->add_option_group("action");
  bOpts->add_option("--coker", coker, "p k")->expected(2);
  bOpts->add_option("--admissible", admissiblePath, "Delta JSON");
  bOpts->add_option("--conic-class", conic, "a field.json")->expected(2);
  bOpts->require_option(1);

  auto* bounds = app.add_subcommand("bounds", "bounds ledger");
  BoundsArgs ba;
  bool table = false;
  bounds->add_option("--case", ba.caseName, "rule name");
  bounds->add_flag("--table", table, "dump the whole ledger");
  bounds->add_option("--n", ba.n);
  bounds->add_option("--degree", ba.degree);
  bounds->add_option("--m", ba.m);
  bounds->add_option("--n-prime", ba.nPrime);
  bounds->add_option("--p", ba.p);
  bounds->add_option("--r", ba.r);
  bounds->add_option("--char", ba.characteristic);
  bounds->add_option("--surface", ba.surface);
  bounds->add_option("--type", ba.type, "Dynkin type, e.g. E8");
  bounds->add_option("--pi1", ba.pi1, "|pi_1| for linear_algebraic");
  bounds->add_flag("--non-perfect", ba.nonPerfect);
  bounds->add_flag("--split", ba.split, "severi_brauer: algebra not division");
  bool noPoint = false;
  bounds->add_flag("--has-point", ba.hasPoint);
  bounds->add_flag("--no-point", noPoint, "default; quadric without rational points");
  bounds->add_flag("--no-roots-of-unity", ba.noRoots);
  bounds->add_flag("--assemble", ba.assemble, "route through the minimal-model case split");

  auto* verify = app.add_subcommand("verify-all", "run the acceptance suite");
  std::vector<int> only;
  verify->add_option("--only", only, "criterion ids")->delimiter(',');

  const auto t0 = std::chrono::steady_clock::now();
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << oneLine(e.what()) << "\n";
    return 1;
  }

  try {
    Report rep;
    if (glnz->parsed()) {
      if (upsilonN) rep = glnzUpsilon(*upsilonN, entryBound, cap);
      else if (!closurePath.empty()) rep = glnzClosure(closurePath, cap);
      else rep = glnzMinkowski(minkowskiPath, modulus, cap);
    } else if (torus->parsed()) {
      if (!profilePath.empty()) rep = torusProfile(profilePath, dMax, torusChar);
      else if (!anisoPath.empty()) rep = torusAnisotropic(anisoPath);
      else rep = torusH1(h1Path);
    } else if (quad->parsed()) {
      if (!isoPath.empty()) rep = quadIsotropy(isoPath);
      else if (!arfPath.empty()) rep = quadArf(arfPath);
      else {
        if (axis.empty()) throw InputError("--reflect needs --axis");
        rep = quadReflect(reflectPath, axis);
      }
    } else if (csa->parsed()) {
      if (weylP) rep = csaWeyl(*weylP);
      else if (!auditPath.empty()) rep = csaAudit(auditPath, auditMode, sweep);
      else rep = csaMinpoly(minpolyPath, conductor);
    } else if (brauer->parsed()) {
      if (!coker.empty()) rep = brauerCoker(coker.at(0), coker.at(1));
      else if (!admissiblePath.empty()) rep = brauerAdmissible(admissiblePath);
      else rep = brauerConic(conic);
    } else if (bounds->parsed()) {
      if (table == !ba.caseName.empty()) throw InputError("bounds needs exactly one of --case and --table");
      if (noPoint && ba.hasPoint) throw InputError("--no-point and --has-point conflict");
      rep = table ? boundsTable() : boundsCase(ba);
    } else {
      for (int id : only)
        if (id < 1 || id > kCriterionCount) throw InputError("--only ids must lie in [1, 13]");
      rep = verifyAll(only, stable, err);
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    out << rep.render(stable, ms);
    return rep.allPassed ? 0 : 2;
  } catch (const std::exception& e) {
    // InputError, OutOfLedger and the library's domain errors all mean bad input.
    err << "error: " << oneLine(e.what()) << "\n";
    return 1;
  }
}

}  // namespace aniso
