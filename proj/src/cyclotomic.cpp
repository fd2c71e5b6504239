#include "aniso/cyclotomic.hpp"

#include "aniso/finite_field.hpp"
#include "aniso/lattice.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <optional>

namespace aniso {

namespace {

using Poly = std::vector<Rational>;

void trim(Poly& p) {
  while (!p.empty() && p.back().isZero()) p.pop_back();
}

Poly polyMul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  trim(c);
  return c;
}

Poly polySub(Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rational(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

// a = q b + r
std::pair<Poly, Poly> polyDivMod(Poly a, const Poly& b) {
  trim(a);
  if (a.size() < b.size()) return {{}, a};
  Poly q(a.size() - b.size() + 1, Rational(0));
  for (std::size_t k = q.size(); k-- > 0;) {
    const Rational c = a[k + b.size() - 1] / b.back();
    q[k] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[k + i] -= c * b[i];
  }
  trim(a);
  trim(q);
  return {q, a};
}

// Continued-fraction reconstruction with bounded denominator.
std::optional<Rational> rationalize(double x) {
  if (!std::isfinite(x) || std::abs(x) > 1e9) return std::nullopt;
  long long h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  double y = x;
  for (int step = 0; step < 40; ++step) {
    const double a = std::floor(y);
    const auto ai = static_cast<long long>(a);
    const long long h2 = ai * h1 + h0, k2 = ai * k1 + k0;
    if (k2 > 100'000) break;
    h0 = h1;
    h1 = h2;
    k0 = k1;
    k1 = k2;
    if (std::abs(static_cast<double>(h1) / static_cast<double>(k1) - x) < 1e-9 * std::max(1.0, std::abs(x))) {
      return Rational(Int(h1), Int(k1));
    }
    const double frac = y - a;
    if (std::abs(frac) < 1e-15) break;
    y = 1.0 / frac;
  }
  return std::nullopt;
}

CyclotomicField::Element evalPoly(const CyclotomicField& k, const CycPoly& g, const CyclotomicField::Element& x) {
  CyclotomicField::Element acc = k.zero();
  for (std::size_t i = g.size(); i-- > 0;) acc = k.add(k.mul(acc, x), g[i]);
  return acc;
}

}  // namespace

CyclotomicField::CyclotomicField(unsigned conductor) : n_(conductor) {
  if (conductor < 1 || conductor > 24) throw std::invalid_argument("conductor must be between 1 and 24");
  for (const Int& c : cyclotomicPolynomial(conductor)) modulus_.emplace_back(c);
}

CyclotomicField::Element CyclotomicField::fromRational(const Rational& r) const {
  Element e = zero();
  e[0] = r;
  return e;
}

CyclotomicField::Element CyclotomicField::fromPoly(std::vector<Rational> poly) const {
  trim(poly);
  Poly r = polyDivMod(poly, modulus_).second;
  r.resize(degree(), Rational(0));
  return r;
}

CyclotomicField::Element CyclotomicField::zeta(unsigned k) const {
  Poly p(k + 1, Rational(0));
  p[k] = 1;
  return fromPoly(p);
}

CyclotomicField::Element CyclotomicField::add(const Element& a, const Element& b) const {
  Element c(degree());
  for (std::size_t i = 0; i < degree(); ++i) c[i] = a[i] + b[i];
  return c;
}

CyclotomicField::Element CyclotomicField::sub(const Element& a, const Element& b) const {
  Element c(degree());
  for (std::size_t i = 0; i < degree(); ++i) c[i] = a[i] - b[i];
  return c;
}

CyclotomicField::Element CyclotomicField::neg(const Element& a) const { return sub(zero(), a); }

CyclotomicField::Element CyclotomicField::mul(const Element& a, const Element& b) const {
  Poly pa = a, pb = b;
  trim(pa);
  trim(pb);
  return fromPoly(polyMul(pa, pb));
}

CyclotomicField::Element CyclotomicField::inv(const Element& a) const {
  Poly pa = a;
  trim(pa);
  if (pa.empty()) throw std::domain_error("inverse of zero");
  // extended Euclid: s a + t Phi = g
  Poly r0 = modulus_, r1 = pa, s0{}, s1{Rational(1)};
  while (!r1.empty()) {
    auto [q, r] = polyDivMod(r0, r1);
    Poly s = polySub(s0, polyMul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  // r0 is a nonzero constant since Phi_N is irreducible
  const Rational g = r0[0];
  for (auto& c : s0) c /= g;
  return fromPoly(s0);
}

CyclotomicField::Element CyclotomicField::pow(const Element& a, unsigned e) const {
  Element r = one();
  for (unsigned i = 0; i < e; ++i) r = mul(r, a);
  return r;
}

bool CyclotomicField::isZero(const Element& a) {
  return std::all_of(a.begin(), a.end(), [](const Rational& c) { return c.isZero(); });
}

std::complex<double> CyclotomicField::embed(const Element& a, unsigned j) const {
  const double angle = 2.0 * std::numbers::pi * j / n_;
  std::complex<double> s = 0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const double c = static_cast<double>(a[k].num().raw()) / static_cast<double>(a[k].den().raw());
    s += c * std::polar(1.0, angle * static_cast<double>(k));
  }
  return s;
}

std::string CyclotomicField::format(const Element& a) const {
  std::string s;
  for (std::size_t k = a.size(); k-- > 0;) {
    if (a[k].isZero()) continue;
    std::string c = a[k].str();
    const bool negative = c.front() == '-';
    if (negative) c.erase(0, 1);
    if (!s.empty()) s += negative ? "-" : "+";
    else if (negative) s += "-";
    if (k == 0) {
      s += c;
      continue;
    }
    if (c != "1") s += c + "*";
    s += k == 1 ? "z" : "z^" + std::to_string(k);
  }
  return s.empty() ? "0" : s;
}

CycMatrix cycIdentity(const CyclotomicField& k, std::size_t n) {
  CycMatrix m{n, std::vector<CyclotomicField::Element>(n * n, k.zero())};
  for (std::size_t i = 0; i < n; ++i) m(i, i) = k.one();
  return m;
}

CycMatrix cycMul(const CyclotomicField& k, const CycMatrix& a, const CycMatrix& b) {
  CycMatrix c{a.n, std::vector<CyclotomicField::Element>(a.n * a.n, k.zero())};
  for (std::size_t i = 0; i < a.n; ++i)
    for (std::size_t j = 0; j < a.n; ++j)
      for (std::size_t t = 0; t < a.n; ++t) c(i, j) = k.add(c(i, j), k.mul(a(i, t), b(t, j)));
  return c;
}

CycPoly minimalPolynomial(const CyclotomicField& k, const CycMatrix& m) {
  const std::size_t n = m.n, len = n * n;
  std::vector<CycMatrix> powers{cycIdentity(k, n)};
  for (std::size_t deg = 1; deg <= n; ++deg) {
    powers.push_back(cycMul(k, powers.back(), m));
    // solve sum_{i<deg} c_i vec(M^i) = vec(M^deg)
    std::vector<std::vector<CyclotomicField::Element>> aug(len, std::vector<CyclotomicField::Element>(deg + 1));
    for (std::size_t row = 0; row < len; ++row) {
      for (std::size_t i = 0; i < deg; ++i) aug[row][i] = powers[i].entries[row];
      aug[row][deg] = powers[deg].entries[row];
    }
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t col = 0; col < deg && r < len; ++col) {
      std::size_t piv = r;
      while (piv < len && CyclotomicField::isZero(aug[piv][col])) ++piv;
      if (piv == len) continue;
      std::swap(aug[piv], aug[r]);
      const auto inv = k.inv(aug[r][col]);
      for (auto& x : aug[r]) x = k.mul(x, inv);
      for (std::size_t other = 0; other < len; ++other) {
        if (other == r || CyclotomicField::isZero(aug[other][col])) continue;
        const auto f = aug[other][col];
        for (std::size_t c = 0; c <= deg; ++c) aug[other][c] = k.sub(aug[other][c], k.mul(f, aug[r][c]));
      }
      pivots.push_back(col);
      ++r;
    }
    bool consistent = true;
    for (std::size_t row = r; row < len; ++row) consistent = consistent && CyclotomicField::isZero(aug[row][deg]);
    if (!consistent) continue;
    CycPoly f(deg + 1, k.zero());
    for (std::size_t i = 0; i < r; ++i) f[pivots[i]] = k.neg(aug[i][deg]);
    f[deg] = k.one();
    return f;
  }
  throw std::logic_error("no minimal polynomial of degree <= n");
}

std::vector<CyclotomicField::Element> rootsInField(const CyclotomicField& k, const CycPoly& g) {
  std::size_t deg = g.size() - 1;
  while (deg > 0 && CyclotomicField::isZero(g[deg])) --deg;
  if (deg == 0) return {};
  const unsigned n = k.conductor();
  const auto phi = static_cast<Eigen::Index>(k.degree());
  // one embedding per complex-conjugate pair
  std::vector<unsigned> embeddings;
  for (unsigned j = 1; j <= std::max(1U, n / 2); ++j)
    if (std::gcd(j, n) == 1) embeddings.push_back(j);

  std::vector<std::vector<std::complex<double>>> numericRoots;
  for (unsigned j : embeddings) {
    Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(deg), static_cast<Eigen::Index>(deg));
    const std::complex<double> lead = k.embed(g[deg], j);
    for (std::size_t i = 0; i < deg; ++i) {
      companion(0, static_cast<Eigen::Index>(deg - 1 - i)) = -k.embed(g[i], j) / lead;
      if (i + 1 < deg) companion(static_cast<Eigen::Index>(i + 1), static_cast<Eigen::Index>(i)) = 1.0;
    }
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
    const auto& ev = solver.eigenvalues();
    numericRoots.emplace_back(ev.data(), ev.data() + ev.size());
  }

  // real linear system: coordinates c with sigma_j(sum c_t z^t) = chosen root
  Eigen::MatrixXd sys(2 * static_cast<Eigen::Index>(embeddings.size()), phi);
  for (std::size_t e = 0; e < embeddings.size(); ++e) {
    const double angle = 2.0 * std::numbers::pi * embeddings[e] / n;
    for (Eigen::Index t = 0; t < phi; ++t) {
      sys(2 * static_cast<Eigen::Index>(e), t) = std::cos(angle * static_cast<double>(t));
      sys(2 * static_cast<Eigen::Index>(e) + 1, t) = std::sin(angle * static_cast<double>(t));
    }
  }
  const auto qr = sys.colPivHouseholderQr();

  std::vector<CyclotomicField::Element> found;
  std::vector<std::size_t> choice(embeddings.size(), 0);
  for (;;) {
    Eigen::VectorXd rhs(sys.rows());
    for (std::size_t e = 0; e < embeddings.size(); ++e) {
      rhs(2 * static_cast<Eigen::Index>(e)) = numericRoots[e][choice[e]].real();
      rhs(2 * static_cast<Eigen::Index>(e) + 1) = numericRoots[e][choice[e]].imag();
    }
    const Eigen::VectorXd c = qr.solve(rhs);
    if ((sys * c - rhs).norm() < 1e-6 * std::max(1.0, rhs.norm())) {
      CyclotomicField::Element cand = k.zero();
      bool ok = true;
      for (Eigen::Index t = 0; t < phi && ok; ++t) {
        auto r = rationalize(c(t));
        ok = r.has_value();
        if (ok) cand[static_cast<std::size_t>(t)] = *r;
      }
      try {
        if (ok && CyclotomicField::isZero(evalPoly(k, g, cand)) && std::find(found.begin(), found.end(), cand) == found.end())
          found.push_back(cand);
      } catch (const OverflowError&) {
        // a spurious combination of numeric roots; true roots have small coordinates
      }
    }
    std::size_t e = 0;
    while (e < choice.size() && ++choice[e] == deg) choice[e++] = 0;
    if (e == choice.size()) break;
  }
  std::sort(found.begin(), found.end());
  return found;
}

bool binomialIrreducible(const CyclotomicField& k, unsigned r, const CyclotomicField::Element& b) {
  if (r == 0) throw std::invalid_argument("degree must be positive");
  if (CyclotomicField::isZero(b)) return r == 1;
  for (unsigned l = 2; l <= r; ++l) {
    if (r % l != 0 || !isPrime(l)) continue;
    CycPoly g(l + 1, k.zero());
    g[0] = k.neg(b);
    g[l] = k.one();
    if (!rootsInField(k, g).empty()) return false;
  }
  if (r % 4 == 0) {
    // b = -4 c^4
    CycPoly g(5, k.zero());
    g[0] = k.div(b, k.fromRational(4));
    g[4] = k.one();
    if (!rootsInField(k, g).empty()) return false;
  }
  return true;
}

MinpolyReport minpolyStructure(const CyclotomicField& k, const CycMatrix& m) {
  MinpolyReport rep;
  rep.conductor = k.conductor();
  CycMatrix p = m;
  for (unsigned e = 1; e <= 24 && rep.scalarPower == 0; ++e) {
    bool scalar = true;
    for (std::size_t i = 0; i < m.n && scalar; ++i)
      for (std::size_t j = 0; j < m.n && scalar; ++j)
        scalar = i == j ? p(i, j) == p(0, 0) : CyclotomicField::isZero(p(i, j));
    if (scalar) {
      rep.scalarPower = e;
      rep.scalar = p(0, 0);
    } else {
      p = cycMul(k, p, m);
    }
  }
  if (rep.scalarPower == 0) throw NotScalarPower("no power M^m with m <= 24 is scalar");
  if (CyclotomicField::isZero(rep.scalar)) throw std::invalid_argument("matrix is nilpotent");

  rep.minpoly = minimalPolynomial(k, m);
  const std::size_t deg = rep.minpoly.size() - 1;
  for (unsigned r = 1; r <= rep.scalarPower; ++r) {
    if (rep.scalarPower % r != 0 || deg % r != 0) continue;
    bool shaped = true;
    for (std::size_t i = 0; i <= deg; ++i) shaped = shaped && (i % r == 0 || CyclotomicField::isZero(rep.minpoly[i]));
    if (!shaped) continue;
    CycPoly h;
    for (std::size_t i = 0; i <= deg; i += r) h.push_back(rep.minpoly[i]);
    auto roots = rootsInField(k, h);
    if (roots.size() != h.size() - 1) continue;  // h is separable, so split means deg h distinct roots
    rep.r = r;
    for (const auto& b : roots) rep.factors.push_back({b, binomialIrreducible(k, r, b)});
    break;
  }
  if (rep.r == 0) return rep;  // K lacks the roots of unity the shape needs

  CycPoly product{k.one()};
  for (const auto& f : rep.factors) {
    CycPoly next(product.size() + rep.r, k.zero());
    for (std::size_t i = 0; i < product.size(); ++i) {
      next[i + rep.r] = k.add(next[i + rep.r], product[i]);
      next[i] = k.sub(next[i], k.mul(f.b, product[i]));
    }
    product = std::move(next);
  }
  rep.productMatches = product == rep.minpoly;
  rep.mayChangeWithLargerN = rep.r > 1;
  return rep;
}

}  // namespace aniso
