#include "aniso/torus.hpp"

#include "aniso/snf.hpp"

namespace aniso {

GaloisLattice::GaloisLattice(Eigen::Index rank, std::vector<IntMatrix> generators)
    : gamma_(rank < 1 || rank > 4 ? throw std::invalid_argument("lattice rank must be between 1 and 4")
                                  : closure(generators, kDefaultClosureCap, rank)) {
  for (const auto& g : generators)
    if (g.rows() != rank) throw std::invalid_argument("generator rank does not match lattice rank");
}

bool isAnisotropic(const GaloisLattice& l) { return invariantSublattice(l.gamma().generators(), l.rank()).cols() == 0; }

TorsionProfile torsionProfile(const GaloisLattice& l, std::int64_t dMax, unsigned characteristic) {
  if (dMax < 2 || dMax > 60) throw std::invalid_argument("scan limit must be between 2 and 60");
  TorsionProfile p;
  p.dMax = dMax;
  p.characteristic = characteristic;
  for (std::int64_t d = 2; d <= dMax; ++d) {
    FixedModule m = fixedModule(l.gamma().generators(), l.rank(), d);
    TorsionEntry e;
    e.d = d;
    e.exactOrderCount = m.countExactOrder(d);
    e.invariantCount = m.size();
    e.characteristicDivides = characteristic != 0 && d % characteristic == 0;
    if (e.exactOrderCount > 0) p.maxExactOrder = d;
    p.entries.push_back(e);
  }
  return p;
}

IntVector traceVector(const GaloisLattice& l, const IntVector& v) {
  if (v.size() != l.rank()) throw std::invalid_argument("vector length does not match lattice rank");
  IntVector w = IntVector::Zero(l.rank());
  for (const auto& g : l.gamma().elements()) w += g * v;
  return w;
}

Int H1Result::size() const {
  Int s = 1;
  for (const auto& c : cyclicFactors) s *= c;
  return s;
}

H1Result h1Cyclic(const GaloisLattice& l) {
  const MatrixGroup& g = l.gamma();
  const Eigen::Index n = l.rank();
  H1Result r;
  r.groupOrder = g.order();
  std::optional<IntMatrix> sigma;
  for (const auto& e : g.elements()) {
    if (*matrixOrder(e) == g.order()) {
      sigma = e;
      break;
    }
  }
  if (!sigma) throw NotCyclic("Galois image of order " + std::to_string(g.order()) + " is not cyclic");
  r.sigma = *sigma;

  IntMatrix norm = IntMatrix::Zero(n, n);
  IntMatrix power = IntMatrix::Identity(n, n);
  for (std::size_t i = 0; i < g.order(); ++i) {
    norm += power;
    power = power * *sigma;
  }
  IntMatrix kernel = integerKernel(norm);
  if (kernel.cols() > 0) {
    // coordinates of the columns of sigma - 1 in the kernel basis
    IntMatrix x = solveIntegral(kernel, IntMatrix(*sigma - IntMatrix::Identity(n, n)));
    SnfDecomposition d = snf(x);
    std::vector<Int> f = d.invariantFactors();
    f.resize(static_cast<std::size_t>(kernel.cols()), Int(0));
    for (const auto& c : f) {
      if (c == 0) throw std::logic_error("H^1 of a finite group came out infinite");
      if (c != 1) r.cyclicFactors.push_back(c);
    }
  }
  r.annihilatedByOrder = true;
  for (const auto& c : r.cyclicFactors)
    if (Int(static_cast<long long>(r.groupOrder)) % c != 0) r.annihilatedByOrder = false;
  return r;
}

}  // namespace aniso
