#include "aniso/lattice.hpp"
#include "aniso/snf.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace aniso;

namespace {

IntMatrix diag(std::initializer_list<long long> d) {
  IntMatrix a = IntMatrix::Zero(static_cast<Eigen::Index>(d.size()), static_cast<Eigen::Index>(d.size()));
  Eigen::Index i = 0;
  for (long long x : d) {
    a(i, i) = x;
    ++i;
  }
  return a;
}

void checkSnf(const IntMatrix& a) {
  SnfDecomposition s = snf(a);
  CHECK(s.U * a * s.V == s.S);
  CHECK(abs(determinant(s.U)) == 1);
  CHECK(abs(determinant(s.V)) == 1);
  for (Eigen::Index i = 0; i < s.S.rows(); ++i)
    for (Eigen::Index j = 0; j < s.S.cols(); ++j)
      if (i != j) CHECK(s.S(i, j) == 0);
  auto d = s.invariantFactors();
  for (std::size_t i = 0; i + 1 < d.size(); ++i) {
    CHECK(d[i] >= 0);
    if (d[i] != 0) {
      CHECK(d[i + 1] % d[i] == 0);
    } else {
      CHECK(d[i + 1] == 0);
    }
  }
  CHECK(d == oracle::invariantFactorsByMinors(a));
}

}  // namespace

TEST_CASE("checked integers trap on overflow") {
  Int big = Int::fromRaw(static_cast<__int128>(1) << 126);
  CHECK_THROWS_AS(big * Int(4), OverflowError);
  CHECK_THROWS_AS(big + big, OverflowError);
  CHECK(floorMod(Int(-7), Int(3)) == 2);
  CHECK(floorDiv(Int(-7), Int(3)) == -3);
  CHECK(gcd(Int(12), Int(-18)) == 6);
  auto e = extendedGcd(Int(240), Int(46));
  CHECK(e.g == 2);
  CHECK(e.x * 240 + e.y * 46 == 2);
  CHECK(Int(-123456789012345678LL).str() == "-123456789012345678");
}

TEST_CASE("overflow in a matrix product is an error, not wraparound") {
  IntMatrix a(1, 1);
  a(0, 0) = Int::fromRaw(static_cast<__int128>(1) << 100);
  CHECK_THROWS_AS(IntMatrix(a * a), OverflowError);
}

TEST_CASE("rational arithmetic normalizes") {
  Rational a(Int(6), Int(-4));
  CHECK(a.num() == -3);
  CHECK(a.den() == 2);
  CHECK(a + Rational(Int(3), Int(2)) == Rational(0));
  CHECK(a * a.inverse() == Rational(1));
}

TEST_CASE("snf examples") {
  CHECK(snf(IntMatrix::Identity(2, 2)).S == IntMatrix::Identity(2, 2));
  CHECK(snf(intMatrix({{2, 4}, {6, 8}})).S == diag({2, 4}));
  CHECK(snf(diag({6, 4})).S == diag({2, 12}));
  checkSnf(intMatrix({{2, 4}, {6, 8}}));
  checkSnf(diag({6, 4}));
  checkSnf(IntMatrix::Zero(3, 3));
}

TEST_CASE("snf property: transforms, chain and determinantal divisors agree") {
  std::mt19937_64 rng(20261019);
  for (int trial = 0; trial < 150; ++trial) {
    std::uniform_int_distribution<int> dim(1, 4);
    Eigen::Index r = dim(rng), c = dim(rng);
    checkSnf(oracle::randomMatrix(rng, r, c, 6));
  }
}

TEST_CASE("snf of a diagonal matrix matches gcd/lcm (brute force over small unimodular transforms)") {
  // The invariant factors of diag(a, b) are gcd(a, b), lcm(a, b). Confirm
  // diag(6,4) ~ diag(2,12) by searching for unimodular U, V with entries in [-3,3].
  IntMatrix a = diag({6, 4});
  IntMatrix target = diag({2, 12});
  bool found = false;
  for (int u0 = -3; u0 <= 3 && !found; ++u0)
    for (int u1 = -3; u1 <= 3 && !found; ++u1)
      for (int u2 = -3; u2 <= 3 && !found; ++u2)
        for (int u3 = -3; u3 <= 3 && !found; ++u3) {
          IntMatrix u = intMatrix({{u0, u1}, {u2, u3}});
          if (abs(determinant(u)) != 1) continue;
          // V is forced: V = (U A)^{-1} S must be integral
          RatMatrix ua = toRational(u * a);
          if (determinant(ua) == Rational(0)) continue;
          RatMatrix v = inverse(ua) * toRational(target);
          bool integral = true;
          for (Eigen::Index i = 0; i < 2; ++i)
            for (Eigen::Index j = 0; j < 2; ++j) integral = integral && v(i, j).isInteger();
          if (integral) found = true;
        }
  CHECK(found);
}

TEST_CASE("matrix order examples") {
  CHECK(matrixOrder(IntMatrix::Identity(2, 2)) == 1U);
  CHECK(matrixOrder(intMatrix({{0, -1}, {1, 0}})) == 4U);
  CHECK_FALSE(matrixOrder(intMatrix({{1, 1}, {0, 1}})).has_value());
  CHECK(matrixOrder(intMatrix({{0, -1}, {1, -1}})) == 3U);
  CHECK_THROWS_AS(matrixOrder(intMatrix({{2, 0}, {0, 1}})), std::domain_error);
  CHECK_FALSE(matrixOrder(intMatrix({{2, 1}, {1, 1}})).has_value());
}

TEST_CASE("cyclotomic polynomials and the finite-order exponent") {
  CHECK(cyclotomicPolynomial(1) == IntPoly{-1, 1});
  CHECK(cyclotomicPolynomial(6) == IntPoly{1, -1, 1});
  CHECK(cyclotomicPolynomial(12) == IntPoly{1, 0, -1, 0, 1});
  CHECK(finiteOrderExponent(1) == 2);
  CHECK(finiteOrderExponent(2) == 12);
  CHECK(finiteOrderExponent(3) == 12);
  CHECK(finiteOrderExponent(4) == 120);
}

TEST_CASE("characteristic polynomial agrees with det(xI - A) at sample points") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    IntMatrix a = oracle::randomMatrix(rng, 3, 3, 4);
    IntPoly p = characteristicPolynomial(a);
    for (int x = -3; x <= 3; ++x) {
      Int value = 0;
      for (std::size_t i = p.size(); i-- > 0;) value = value * Int(x) + p[i];
      CHECK(value == oracle::cofactorDet(Int(x) * IntMatrix::Identity(3, 3) - a));
    }
  }
}

TEST_CASE("matrix order agrees with naive powering on finite-order inputs up to dimension 4") {
  std::mt19937_64 rng(99);
  int finite = 0;
  for (int trial = 0; trial < 400; ++trial) {
    std::uniform_int_distribution<int> dim(1, 4);
    const Eigen::Index n = dim(rng);
    // signed permutation conjugated by a random unimodular matrix has finite order
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    IntMatrix p = IntMatrix::Zero(n, n);
    std::uniform_int_distribution<int> sign(0, 1);
    for (Eigen::Index i = 0; i < n; ++i) p(i, perm[static_cast<std::size_t>(i)]) = sign(rng) ? 1 : -1;
    IntMatrix u = oracle::randomUnimodular(rng, n, 4);
    IntMatrix a = u * p * unimodularInverse(u);
    auto expected = oracle::naiveOrder(a);
    REQUIRE(expected.has_value());
    CHECK(matrixOrder(a) == expected);
    ++finite;
  }
  // random small unimodular matrices: whenever naive powering finds an order it must agree,
  // and whenever the cyclotomic route says finite, powering must confirm
  for (int trial = 0; trial < 2000; ++trial) {
    IntMatrix a = oracle::randomMatrix(rng, 3, 3, 1);
    Int det = determinant(a);
    if (det != 1 && det != -1) continue;
    auto naive = oracle::naiveOrder(a, 10000);
    CHECK(matrixOrder(a) == naive);
  }
  CHECK(finite == 400);
}

TEST_CASE("invariant sublattice examples") {
  CHECK(invariantSublattice({-IntMatrix::Identity(2, 2)}, 2).cols() == 0);
  IntMatrix swap = intMatrix({{0, 1}, {1, 0}});
  IntMatrix basis = invariantSublattice({swap}, 2);
  REQUIRE(basis.cols() == 1);
  CHECK(abs(basis(0, 0)) == 1);
  CHECK(basis(0, 0) == basis(1, 0));
  CHECK(invariantSublattice({}, 3) == IntMatrix::Identity(3, 3));
}

TEST_CASE("invariant sublattice property: fixed and saturated") {
  std::mt19937_64 rng(5);
  const IntMatrix gens[] = {intMatrix({{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}), intMatrix({{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}),
                            intMatrix({{-1, 0, 0}, {0, 0, 1}, {0, 1, 0}}), intMatrix({{1, 0, 0}, {0, 0, -1}, {0, 1, 0}})};
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<IntMatrix> chosen;
    IntMatrix u = oracle::randomUnimodular(rng, 3, 5);
    IntMatrix ui = unimodularInverse(u);
    for (const auto& g : gens)
      if (rng() % 2 == 0) chosen.push_back(u * g * ui);
    IntMatrix basis = invariantSublattice(chosen, 3);
    for (const auto& g : chosen) CHECK(g * basis == basis);
    // every small fixed vector must be an integral combination of the basis
    for (int x = -3; x <= 3; ++x)
      for (int y = -3; y <= 3; ++y)
        for (int z = -3; z <= 3; ++z) {
          IntVector v = intVector({x, y, z});
          bool fixed = true;
          for (const auto& g : chosen) fixed = fixed && (g * v == v);
          if (!fixed) continue;
          CHECK_NOTHROW(solveIntegral(basis, IntMatrix(v)));
        }
  }
}

TEST_CASE("kernel mod d examples") {
  const std::vector<IntMatrix> minusI{-IntMatrix::Identity(2, 2)};
  CHECK(kernelMod(minusI, 2, 2).size() == 4);
  auto k3 = kernelMod(minusI, 2, 3);
  REQUIRE(k3.size() == 1);
  CHECK(k3[0].entries == std::vector<std::int64_t>{0, 0});
  CHECK(k3[0].order == 1);
  auto s3 = kernelMod({intMatrix({{0, 1}, {1, 0}})}, 2, 3);
  REQUIRE(s3.size() == 3);
  CHECK(s3[0].entries == std::vector<std::int64_t>{0, 0});
  CHECK(s3[1].entries == std::vector<std::int64_t>{1, 1});
  CHECK(s3[2].entries == std::vector<std::int64_t>{2, 2});
  CHECK(s3[1].order == 3);
}

TEST_CASE("kernel mod d cardinality and orders match exhaustive enumeration") {
  std::mt19937_64 rng(11);
  const std::vector<std::vector<IntMatrix>> groups = {
      {},
      {-IntMatrix::Identity(2, 2)},
      {intMatrix({{0, -1}, {1, 0}})},
      {intMatrix({{1, -1}, {1, 0}}), intMatrix({{0, 1}, {1, 0}})},
      {intMatrix({{0, 0, 1}, {1, 0, 0}, {0, 1, 0}})},
      {intMatrix({{-1, 0, 0}, {0, 1, 0}, {0, 0, 1}}), intMatrix({{1, 0, 0}, {0, 0, 1}, {0, 1, 0}})},
  };
  for (const auto& gens : groups) {
    const Eigen::Index n = gens.empty() ? 2 : gens[0].rows();
    for (std::int64_t d = 2; d <= 24; ++d) {
      std::vector<std::vector<std::int64_t>> brute;
      oracle::forEachModVector(d, static_cast<int>(n), [&](const std::vector<std::int64_t>& v) {
        if (oracle::fixedMod(gens, v, d)) brute.push_back(v);
      });
      auto got = kernelMod(gens, n, d);
      REQUIRE(got.size() == brute.size());
      std::sort(brute.begin(), brute.end());
      for (std::size_t i = 0; i < got.size(); ++i) {
        CHECK(got[i].entries == brute[i]);
        // exact order by trial multiplication
        std::int64_t m = 1;
        auto zero = [&](std::int64_t k) {
          for (auto x : brute[i])
            if ((k * x) % d != 0) return false;
          return true;
        };
        while (!zero(m)) ++m;
        CHECK(got[i].order == m);
      }
      FixedModule fm = fixedModule(gens, n, d);
      for (std::int64_t e = 1; e <= d; ++e) {
        if (d % e != 0) continue;
        std::uint64_t exact = 0;
        for (const auto& v : got) exact += v.order == e ? 1U : 0U;
        CHECK(fm.countExactOrder(e) == exact);
      }
    }
  }
}
