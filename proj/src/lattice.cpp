#include "aniso/lattice.hpp"

#include "aniso/snf.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace aniso {

namespace {

void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Divides by a monic polynomial; returns nullopt unless the division is exact.
std::optional<IntPoly> divideExact(const IntPoly& num, const IntPoly& den) {
  if (den.empty() || den.back() != 1) throw std::invalid_argument("divisor must be monic");
  if (num.size() < den.size()) return std::nullopt;
  IntPoly rem = num;
  IntPoly quo(num.size() - den.size() + 1, Int(0));
  for (std::size_t i = quo.size(); i-- > 0;) {
    Int c = rem[i + den.size() - 1];
    quo[i] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < den.size(); ++j) rem[i + j] -= c * den[j];
  }
  trim(rem);
  if (!rem.empty()) return std::nullopt;
  trim(quo);
  return quo;
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

int moebius(std::int64_t n) {
  int mu = 1;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    mu = -mu;
  }
  if (n > 1) mu = -mu;
  return mu;
}

}  // namespace

IntPoly characteristicPolynomial(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("characteristic polynomial of non-square matrix");
  const Eigen::Index n = a.rows();
  IntPoly c(static_cast<std::size_t>(n) + 1, Int(0));
  c[static_cast<std::size_t>(n)] = 1;
  IntMatrix m = IntMatrix::Zero(n, n);
  const IntMatrix id = IntMatrix::Identity(n, n);
  for (Eigen::Index k = 1; k <= n; ++k) {
    m = (a * m).eval() + c[static_cast<std::size_t>(n - k + 1)] * id;
    Int tr = (a * m).eval().trace();
    c[static_cast<std::size_t>(n - k)] = -tr / Int(k);
  }
  return c;
}

unsigned eulerPhi(unsigned n) {
  unsigned result = n;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

IntPoly cyclotomicPolynomial(unsigned d) {
  if (d == 0) throw std::invalid_argument("cyclotomic index must be positive");
  IntPoly p(d + 1, Int(0));
  p[0] = -1;
  p[d] = 1;
  for (unsigned e = 1; e < d; ++e) {
    if (d % e != 0) continue;
    p = *divideExact(p, cyclotomicPolynomial(e));
  }
  return p;
}

std::uint64_t finiteOrderExponent(unsigned n) {
  std::uint64_t l = 1;
  // phi(d) >= sqrt(d/2), so d <= 2 n^2 bounds the search
  for (unsigned d = 1; d <= 2 * n * n + 2; ++d) {
    if (eulerPhi(d) <= n) l = std::lcm(l, static_cast<std::uint64_t>(d));
  }
  return l;
}

std::optional<std::uint64_t> matrixOrder(const IntMatrix& a) {
  Int det = determinant(a);
  if (det != 1 && det != -1) throw std::domain_error("matrix is not invertible over Z");
  const auto n = static_cast<unsigned>(a.rows());
  IntPoly rest = characteristicPolynomial(a);
  std::uint64_t exponent = 1;
  for (unsigned d = 1; d <= 2 * n * n + 2 && rest.size() > 1; ++d) {
    if (eulerPhi(d) > n) continue;
    const IntPoly phi = cyclotomicPolynomial(d);
    while (auto q = divideExact(rest, phi)) {
      rest = *q;
      exponent = std::lcm(exponent, static_cast<std::uint64_t>(d));
    }
  }
  if (rest.size() != 1) return std::nullopt;  // a non-cyclotomic factor survives
  const IntMatrix id = IntMatrix::Identity(a.rows(), a.cols());
  if (matrixPower(a, exponent) != id) return std::nullopt;  // not semisimple
  for (std::uint64_t k = 1; k <= exponent; ++k) {
    if (exponent % k == 0 && matrixPower(a, k) == id) return k;
  }
  return exponent;
}

IntMatrix invariantSublattice(const std::vector<IntMatrix>& gens, Eigen::Index dim) {
  if (gens.empty()) return IntMatrix::Identity(dim, dim);
  IntMatrix stacked(static_cast<Eigen::Index>(gens.size()) * dim, dim);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (gens[i].rows() != dim || gens[i].cols() != dim) throw std::invalid_argument("generator dimension mismatch");
    stacked.middleRows(static_cast<Eigen::Index>(i) * dim, dim) = gens[i] - IntMatrix::Identity(dim, dim);
  }
  return integerKernel(stacked);
}

std::int64_t additiveOrder(const std::vector<std::int64_t>& v, std::int64_t d) {
  std::int64_t g = d;
  for (std::int64_t x : v) g = gcd64(g, x);
  return d / g;
}

std::uint64_t FixedModule::size() const {
  std::uint64_t s = 1;
  for (std::int64_t c : cyclicOrders) s *= static_cast<std::uint64_t>(c);
  return s;
}

std::uint64_t FixedModule::countDividing(std::int64_t e) const {
  std::uint64_t s = 1;
  for (std::int64_t c : cyclicOrders) s *= static_cast<std::uint64_t>(gcd64(c, e));
  return s;
}

std::uint64_t FixedModule::countExactOrder(std::int64_t e) const {
  std::int64_t total = 0;
  for (std::int64_t f = 1; f <= e; ++f) {
    if (e % f != 0) continue;
    total += moebius(e / f) * static_cast<std::int64_t>(countDividing(f));
  }
  return static_cast<std::uint64_t>(total);
}

std::vector<ModVector> FixedModule::elements() const {
  std::vector<ModVector> out;
  std::vector<std::int64_t> coeff(cyclicOrders.size(), 0);
  const auto n = static_cast<std::size_t>(dim);
  for (;;) {
    ModVector v;
    v.entries.assign(n, 0);
    for (std::size_t i = 0; i < cyclicOrders.size(); ++i) {
      for (std::size_t j = 0; j < n; ++j) v.entries[j] = (v.entries[j] + coeff[i] * gens[i][j]) % modulus;
    }
    v.order = additiveOrder(v.entries, modulus);
    out.push_back(std::move(v));
    std::size_t k = 0;
    while (k < coeff.size() && ++coeff[k] == cyclicOrders[k]) coeff[k++] = 0;
    if (k == coeff.size()) break;
  }
  std::sort(out.begin(), out.end(), [](const ModVector& a, const ModVector& b) { return a.entries < b.entries; });
  return out;
}

FixedModule fixedModule(const std::vector<IntMatrix>& gens, Eigen::Index dim, std::int64_t d) {
  if (d < 2) throw std::invalid_argument("modulus must be at least 2");
  IntMatrix stacked(static_cast<Eigen::Index>(gens.size()) * dim, dim);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (gens[i].rows() != dim || gens[i].cols() != dim) throw std::invalid_argument("generator dimension mismatch");
    stacked.middleRows(static_cast<Eigen::Index>(i) * dim, dim) = gens[i] - IntMatrix::Identity(dim, dim);
  }
  SnfDecomposition s = snf(stacked);
  FixedModule fm;
  fm.modulus = d;
  fm.dim = dim;
  for (Eigen::Index i = 0; i < dim; ++i) {
    Int si = i < s.S.rows() ? s.S(i, i) : Int(0);
    std::int64_t c = si == 0 ? d : gcd64(floorMod(si, d).toInt64(), d);
    if (c == 0) c = d;
    if (c == 1) continue;
    std::vector<std::int64_t> g(static_cast<std::size_t>(dim));
    for (Eigen::Index j = 0; j < dim; ++j) {
      g[static_cast<std::size_t>(j)] = floorMod(s.V(j, i) * Int(d / c), d).toInt64();
    }
    fm.cyclicOrders.push_back(c);
    fm.gens.push_back(std::move(g));
  }
  return fm;
}

std::vector<ModVector> kernelMod(const std::vector<IntMatrix>& gens, Eigen::Index dim, std::int64_t d) {
  return fixedModule(gens, dim, d).elements();
}

}  // namespace aniso
