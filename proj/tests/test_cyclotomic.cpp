#include "aniso/cyclotomic.hpp"

#include <doctest.h>

#include <random>

using namespace aniso;

namespace {

using Elem = CyclotomicField::Element;

CycMatrix intCycMatrix(const CyclotomicField& k, std::initializer_list<std::initializer_list<long long>> rows) {
  CycMatrix m{rows.size(), {}};
  for (const auto& row : rows)
    for (long long v : row) m.entries.push_back(k.fromRational(Rational(v)));
  return m;
}

Elem randomElem(const CyclotomicField& k, std::mt19937_64& rng, int bound) {
  std::uniform_int_distribution<int> d(-bound, bound);
  Elem e = k.zero();
  for (auto& c : e) c = Rational(d(rng));
  return e;
}

bool annihilates(const CyclotomicField& k, const CycPoly& f, const CycMatrix& m) {
  CycMatrix acc{m.n, std::vector<Elem>(m.n * m.n, k.zero())};
  for (std::size_t i = f.size(); i-- > 0;) {
    acc = cycMul(k, acc, m);
    for (std::size_t d = 0; d < m.n; ++d) acc(d, d) = k.add(acc(d, d), f[i]);
  }
  for (const auto& e : acc.entries)
    if (!CyclotomicField::isZero(e)) return false;
  return true;
}

}  // namespace

TEST_CASE("cyclotomic field arithmetic") {
  for (unsigned n : {1U, 3U, 4U, 5U, 8U, 12U, 24U}) {
    const CyclotomicField k(n);
    CHECK(k.pow(k.zeta(), n) == k.one());
    for (unsigned d = 1; d < n; ++d) CHECK_FALSE(k.pow(k.zeta(), d) == k.one());
    std::mt19937_64 rng(n);
    for (int trial = 0; trial < 20; ++trial) {
      Elem a = randomElem(k, rng, 3);
      if (CyclotomicField::isZero(a)) continue;
      CHECK(k.mul(a, k.inv(a)) == k.one());
      Elem b = randomElem(k, rng, 3);
      const auto lhs = k.embed(k.mul(a, b), 1), rhs = k.embed(a, 1) * k.embed(b, 1);
      CHECK(std::abs(lhs - rhs) < 1e-9);
    }
  }
  CHECK(CyclotomicField(4).format(CyclotomicField(4).zeta()) == "z");
  CHECK_THROWS(CyclotomicField(25));
}

TEST_CASE("roots in the field") {
  const CyclotomicField q(1), k4(4), k8(8);
  // y^2 + 1
  CHECK(rootsInField(q, {q.one(), q.zero(), q.one()}).empty());
  auto r4 = rootsInField(k4, {k4.one(), k4.zero(), k4.one()});
  CHECK(r4.size() == 2);
  // y^2 - 2 splits once sqrt 2 = z - z^3 is present
  auto r8 = rootsInField(k8, {k8.fromRational(-2), k8.zero(), k8.one()});
  REQUIRE(r8.size() == 2);
  CHECK((r8[0] == k8.sub(k8.zeta(), k8.zeta(3)) || r8[1] == k8.sub(k8.zeta(), k8.zeta(3))));
}

TEST_CASE("roots of products of random linear factors") {
  std::mt19937_64 rng(99);
  for (unsigned n : {3U, 5U, 7U, 12U}) {
    const CyclotomicField k(n);
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<Elem> roots;
      CycPoly g{k.one()};
      for (int i = 0; i < 3; ++i) {
        Elem b = randomElem(k, rng, 2);
        b[0] = b[0] + Rational(Int(static_cast<long long>(i)), Int(2));
        if (std::find(roots.begin(), roots.end(), b) == roots.end()) roots.push_back(b);
        CycPoly next(g.size() + 1, k.zero());
        for (std::size_t t = 0; t < g.size(); ++t) {
          next[t + 1] = k.add(next[t + 1], g[t]);
          next[t] = k.sub(next[t], k.mul(b, g[t]));
        }
        g = next;
      }
      std::sort(roots.begin(), roots.end());
      CHECK(rootsInField(k, g) == roots);
    }
  }
}

TEST_CASE("binomial irreducibility") {
  const CyclotomicField q(1), k4(4), k3(3);
  CHECK(binomialIrreducible(q, 2, q.fromRational(-1)));
  CHECK_FALSE(binomialIrreducible(k4, 2, k4.fromRational(-1)));
  CHECK_FALSE(binomialIrreducible(q, 4, q.fromRational(-4)));  // y^4 + 4 = (y^2+2y+2)(y^2-2y+2)
  CHECK(binomialIrreducible(q, 3, q.fromRational(2)));
  CHECK_FALSE(binomialIrreducible(k3, 3, k3.fromRational(8)));
  CHECK(binomialIrreducible(k3, 3, k3.fromRational(2)));
}

TEST_CASE("minimal polynomial structure examples") {
  const CyclotomicField q(1), k4(4);
  MinpolyReport scalar = minpolyStructure(q, intCycMatrix(q, {{5, 0}, {0, 5}}));
  CHECK(scalar.minpoly.size() == 2);
  CHECK(scalar.r == 1);
  REQUIRE(scalar.factors.size() == 1);
  CHECK(scalar.factors[0].b == q.fromRational(5));

  MinpolyReport rotI = minpolyStructure(k4, intCycMatrix(k4, {{0, -1}, {1, 0}}));
  CHECK(rotI.r == 1);
  REQUIRE(rotI.factors.size() == 2);
  std::vector<Elem> bs{rotI.factors[0].b, rotI.factors[1].b};
  std::vector<Elem> expect{k4.zeta(), k4.neg(k4.zeta())};
  std::sort(expect.begin(), expect.end());
  CHECK(bs == expect);
  CHECK(rotI.productMatches);
  CHECK_FALSE(rotI.mayChangeWithLargerN);

  MinpolyReport rotQ = minpolyStructure(q, intCycMatrix(q, {{0, -1}, {1, 0}}));
  CHECK(rotQ.r == 2);
  REQUIRE(rotQ.factors.size() == 1);
  CHECK(rotQ.factors[0].b == q.fromRational(-1));
  CHECK(rotQ.factors[0].irreducible);
  CHECK(rotQ.productMatches);
  CHECK(rotQ.mayChangeWithLargerN);
  CHECK(rotQ.scalarPower == 2);

  // order 3 rotation over Q: y^2 + y + 1 has no binomial shape without cube roots of 1
  MinpolyReport rot3 = minpolyStructure(q, intCycMatrix(q, {{0, -1}, {1, -1}}));
  CHECK(rot3.r == 0);
  CHECK(minpolyStructure(CyclotomicField(3), intCycMatrix(CyclotomicField(3), {{0, -1}, {1, -1}})).r == 1);

  CHECK_THROWS_AS(minpolyStructure(q, intCycMatrix(q, {{1, 1}, {0, 1}})), NotScalarPower);
}

TEST_CASE("minimal polynomial annihilates and is minimal") {
  std::mt19937_64 rng(4);
  for (unsigned n : {1U, 4U, 6U, 8U, 12U}) {
    const CyclotomicField k(n);
    for (int trial = 0; trial < 10; ++trial) {
      CycMatrix m{3, {}};
      for (int i = 0; i < 9; ++i) m.entries.push_back(randomElem(k, rng, 1));
      CycPoly f = minimalPolynomial(k, m);
      CHECK(annihilates(k, f, m));
      CHECK(f.back() == k.one());
      // no monic polynomial of lower degree built from the Krylov sequence
      for (std::size_t d = 1; d + 1 < f.size(); ++d) {
        CycPoly lower(f.begin() + static_cast<std::ptrdiff_t>(f.size() - 1 - d), f.end());
        CHECK_FALSE(annihilates(k, lower, m));
      }
    }
  }
}

TEST_CASE("binomial factorisation of finite-order matrices") {
  // signed permutation matrices and products with scalars in Q(zeta_N)
  const std::vector<std::vector<std::vector<long long>>> mats{
      {{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}, {{0, -1, 0}, {1, 0, 0}, {0, 0, 1}}, {{0, 0, -1}, {1, 0, 0}, {0, 1, 0}},
      {{-1, 0, 0}, {0, 0, 1}, {0, 1, 0}}, {{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}};
  for (unsigned n : {1U, 3U, 4U, 6U, 12U}) {
    const CyclotomicField k(n);
    for (const auto& rows : mats) {
      CycMatrix m{3, {}};
      for (const auto& row : rows)
        for (long long v : row) m.entries.push_back(k.fromRational(Rational(v)));
      MinpolyReport rep = minpolyStructure(k, m);
      if (n == 1 && rows == mats[0]) {
        // y^3 - 1 over Q: the binomial shape exists but the factor is reducible
        CHECK(rep.r == 3);
        CHECK_FALSE(rep.factors.at(0).irreducible);
      }
      if (rep.r == 0) continue;
      CHECK(rep.productMatches);
      CHECK(rep.scalarPower % rep.r == 0);
      // every eigenvalue here is a 12th root of unity, so Q(zeta_12) splits them
      if (n == 12) {
        CHECK(rep.r == 1);
        for (const auto& f : rep.factors) CHECK(f.irreducible);
      }
    }
  }
}
