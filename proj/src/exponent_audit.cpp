#include "aniso/exponent_audit.hpp"

#include "aniso/group.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace aniso {

namespace {

std::uint64_t coprimePart(std::uint64_t x, unsigned p) {
  while (x % p == 0) x /= p;
  return x;
}

std::set<std::string> keySet(const FiniteMatrixGroup& g) {
  std::set<std::string> keys;
  for (const auto& e : g.elements) keys.insert(fqKey(e));
  return keys;
}

}  // namespace

FqMatrix projectiveNormalize(const FiniteField& f, const FqMatrix& m) {
  for (Eigen::Index i = 0; i < m.size(); ++i) {
    const auto lead = m(i / m.cols(), i % m.cols());
    if (lead == 0) continue;
    const auto inv = f.inv(lead);
    FqMatrix out(m.rows(), m.cols());
    for (Eigen::Index r = 0; r < m.rows(); ++r)
      for (Eigen::Index c = 0; c < m.cols(); ++c) out(r, c) = f.mul(m(r, c), inv);
    return out;
  }
  throw std::domain_error("zero matrix has no projective class");
}

FiniteMatrixGroup finiteClosure(const FiniteField& f, Eigen::Index n, const std::vector<FqMatrix>& gens, bool projective,
                                std::size_t cap) {
  std::vector<FqMatrix> normGens;
  for (const auto& g : gens) {
    if (g.rows() != n || g.cols() != n) throw std::invalid_argument("generator dimension mismatch");
    if (fqDet(f, g) == 0) throw std::invalid_argument("generator is singular");
    normGens.push_back(projective ? projectiveNormalize(f, g) : g);
  }
  auto mul = [&](const FqMatrix& a, const FqMatrix& b) {
    FqMatrix c = fqMul(f, a, b);
    return projective ? projectiveNormalize(f, c) : c;
  };
  FiniteMatrixGroup g{f, n, projective, {}};
  try {
    g.elements = closeUnder(normGens, fqIdentity(n), mul, fqKey, cap);
  } catch (const CapExceeded&) {
    throw GroupTooLarge("group has more than " + std::to_string(cap) + " elements");
  }
  return g;
}

FiniteMatrixGroup generalLinear(const FiniteField& f, Eigen::Index n) {
  return {f, n, false, generalLinearGroup(f, n)};
}

FiniteMatrixGroup projectiveGeneralLinear(const FiniteField& f, Eigen::Index n) {
  FiniteMatrixGroup g{f, n, true, {}};
  std::set<std::string> seen;
  for (const auto& m : generalLinearGroup(f, n)) {
    FqMatrix p = projectiveNormalize(f, m);
    if (seen.insert(fqKey(p)).second) g.elements.push_back(p);
  }
  return g;
}

std::uint64_t elementOrder(const FiniteMatrixGroup& g, const FqMatrix& m) {
  const FqMatrix id = fqIdentity(g.n);
  FqMatrix p = m;
  std::uint64_t k = 1;
  while (!(p == id)) {
    p = fqMul(g.field, p, m);
    if (g.projective) p = projectiveNormalize(g.field, p);
    if (++k > g.order() + 1) throw std::logic_error("element order exceeds group order");
  }
  return k;
}

ExponentAudit exponentBoundAudit(const FiniteMatrixGroup& g, AuditMode mode) {
  if (g.order() > kFiniteGroupCap) throw GroupTooLarge("audit is limited to groups of order 10^5");
  const unsigned p = g.field.characteristic();
  ExponentAudit a;
  a.mode = mode;
  a.characteristic = p;
  a.groupOrder = g.order();
  a.groupOrderPrime = coprimePart(g.order(), p);
  a.nPrime = coprimePart(static_cast<std::uint64_t>(g.n), p);
  for (const auto& e : g.elements) {
    const std::uint64_t ord = elementOrder(g, e);
    if (ord % p == 0) {
      a.hypothesisHolds = false;
    } else {
      a.d = std::lcm(a.d, ord);
    }
  }
  if (mode == AuditMode::General) {
    a.bound = pow(Int(static_cast<long long>(a.d)), static_cast<unsigned>(g.n));
    a.compared = a.groupOrderPrime;
    a.hypothesisHolds = true;  // the general form only constrains elements of order coprime to p
  } else {
    a.bound = pow(Int(static_cast<long long>(a.nPrime * a.d)), static_cast<unsigned>(g.n - 1));
    a.compared = a.hypothesisHolds ? a.groupOrder : a.groupOrderPrime;
  }
  a.holds = Int(static_cast<long long>(a.compared)) <= a.bound;
  return a;
}

std::vector<FiniteMatrixGroup> subgroupSweep(const FiniteMatrixGroup& g) {
  std::set<std::set<std::string>> seen;
  std::vector<FiniteMatrixGroup> out;
  std::vector<FqMatrix> cyclicGens;
  for (const auto& e : g.elements) {
    FiniteMatrixGroup c = finiteClosure(g.field, g.n, {e}, g.projective);
    if (seen.insert(keySet(c)).second) {
      cyclicGens.push_back(e);
      out.push_back(std::move(c));
    }
  }
  for (std::size_t i = 0; i < cyclicGens.size(); ++i) {
    for (std::size_t j = i + 1; j < cyclicGens.size(); ++j) {
      FiniteMatrixGroup h = finiteClosure(g.field, g.n, {cyclicGens[i], cyclicGens[j]}, g.projective);
      if (seen.insert(keySet(h)).second) out.push_back(std::move(h));
    }
  }
  return out;
}

}  // namespace aniso
