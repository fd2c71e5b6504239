#include "aniso/glnz.hpp"
#include "aniso/lattice.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <set>

using namespace aniso;

namespace {

const IntMatrix kRot4 = intMatrix({{0, -1}, {1, 0}});
const IntMatrix kRot6 = intMatrix({{1, -1}, {1, 0}});
const IntMatrix kSwap = intMatrix({{0, 1}, {1, 0}});

MatrixGroup hexagonal() { return closure({kRot6, kSwap}); }

// Does some nonzero vector with entries in [-3, 3] lie fixed by every element?
bool smallFixedVectorExists(const std::vector<IntMatrix>& elems) {
  for (int a = -3; a <= 3; ++a) {
    for (int b = -3; b <= 3; ++b) {
      if (a == 0 && b == 0) continue;
      IntVector v = intVector({a, b});
      bool fixed = true;
      for (const auto& e : elems) fixed = fixed && IntVector(e * v) == v;
      if (fixed) return true;
    }
  }
  return false;
}

bool isClosed(const MatrixGroup& g) {
  for (const auto& a : g.elements()) {
    if (!g.contains(unimodularInverse(a))) return false;
    for (const auto& b : g.elements())
      if (!g.contains(a * b)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("closure examples") {
  CHECK(closure({IntMatrix(-identity<Int>(2))}).order() == 2);
  CHECK(closure({kRot4}).order() == 4);
  MatrixGroup h = hexagonal();
  CHECK(h.order() == 12);
  CHECK(isClosed(h));
  CHECK(h.elements().front() == identity<Int>(2));
  CHECK(closure({}, kDefaultClosureCap, 3).order() == 1);
}

TEST_CASE("closure errors") {
  CHECK_THROWS_AS(closure({intMatrix({{1, 1}, {0, 1}})}), InfiniteOrderGenerator);
  // two involutions whose product has infinite order
  CHECK_THROWS_AS(closure({intMatrix({{-1, 0}, {0, 1}}), intMatrix({{-1, 1}, {0, 1}})}), CapExceeded);
  CHECK_THROWS_AS(closure({kRot6, kSwap}, 5), CapExceeded);
}

TEST_CASE("element orders in rank 2 and 3 groups") {
  const std::set<std::uint64_t> allowed{1, 2, 3, 4, 6};
  MatrixGroup h = hexagonal();
  for (const auto& e : h.elements()) {
    auto ord = matrixOrder(e);
    REQUIRE(ord);
    CHECK(allowed.count(*ord) == 1);
    CHECK(oracle::naiveOrder(e) == ord);
  }
  MatrixGroup cube = closure({intMatrix({{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}), intMatrix({{0, -1, 0}, {1, 0, 0}, {0, 0, 1}}),
                              IntMatrix(-identity<Int>(3))});
  CHECK(cube.order() == 48);
  CHECK(isClosed(cube));
  for (const auto& e : cube.elements()) CHECK(allowed.count(*matrixOrder(e)) == 1);
}

TEST_CASE("minkowski injection") {
  MatrixGroup pm = closure({IntMatrix(-identity<Int>(2))});
  auto r3 = minkowskiInjectionCheck(pm, 3);
  CHECK(r3.injective);
  CHECK(r3.imageSize == 2);
  auto r2 = minkowskiInjectionCheck(pm, 2);
  CHECK_FALSE(r2.injective);
  REQUIRE(r2.witness);
  CHECK(*r2.witness == IntMatrix(-identity<Int>(2)));
  auto h3 = minkowskiInjectionCheck(hexagonal(), 3);
  CHECK(h3.injective);
  CHECK(h3.imageSize == 12);
  CHECK_THROWS(minkowskiInjectionCheck(pm, 1));
}

TEST_CASE("minkowski injection for every m >= 3 on sample groups") {
  MatrixGroup cube = closure({intMatrix({{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}), intMatrix({{0, -1, 0}, {1, 0, 0}, {0, 0, 1}}),
                              IntMatrix(-identity<Int>(3))});
  for (std::int64_t m = 3; m <= 30; ++m) {
    CHECK(minkowskiInjectionCheck(hexagonal(), m).injective);
    CHECK(minkowskiInjectionCheck(cube, m).injective);
  }
  // reduction mod 2 kills -I in the cube group too
  CHECK_FALSE(minkowskiInjectionCheck(cube, 2).injective);
}

TEST_CASE("upsilon search small ranks") {
  auto r1 = upsilonSearch(1, 1);
  CHECK(r1.maxOrder == 2);
  CHECK(r1.mod3UpperBound == 2);
  auto r2 = upsilonSearch(2, 1);
  CHECK(r2.maxOrder == 12);
  CHECK(r2.mod3UpperBound == 48);
  CHECK(closure(r2.witnessGenerators).order() == 12);
  CHECK(upsilonSearch(2, 1, kDefaultClosureCap, 3).maxOrder == 12);
  CHECK_THROWS(upsilonSearch(4, 1));
}

TEST_CASE("finite-order matrices agree with naive powering") {
  auto fin = finiteOrderMatrices(2, 1);
  std::size_t brute = 0;
  for (int c = 0; c < 81; ++c) {
    int x = c;
    IntMatrix a(2, 2);
    for (int idx = 3; idx >= 0; --idx) {
      a(idx / 2, idx % 2) = x % 3 - 1;
      x /= 3;
    }
    Int det = oracle::cofactorDet(a);
    if ((det == 1 || det == -1) && oracle::naiveOrder(a)) ++brute;
  }
  CHECK(fin.size() == brute);
}

TEST_CASE("fixed vector examples") {
  auto swapGroup = fixedVectorGroupCheck(closure({kSwap}));
  REQUIRE(swapGroup.fixedVector);
  CHECK(*swapGroup.fixedVector == intVector({1, 1}));
  auto pm = fixedVectorGroupCheck(closure({IntMatrix(-identity<Int>(2))}));
  REQUIRE(pm.failingElement);
  CHECK(*pm.failingElement == IntMatrix(-identity<Int>(2)));
  auto klein = fixedVectorGroupCheck(closure({intMatrix({{1, 0}, {0, -1}}), intMatrix({{-1, 0}, {0, 1}})}));
  REQUIRE(klein.failingElement);
  CHECK(*klein.failingElement == IntMatrix(-identity<Int>(2)));
}

TEST_CASE("fixed vector check over every subgroup of the hexagonal group") {
  MatrixGroup h = hexagonal();
  std::set<std::set<std::string>> seen;
  std::size_t hypothesisHolds = 0;
  for (const auto& a : h.elements()) {
    for (const auto& b : h.elements()) {
      MatrixGroup s = closure({a, b});
      std::set<std::string> keys;
      for (const auto& e : s.elements()) keys.insert(matrixKey(e));
      if (!seen.insert(keys).second) continue;
      bool every = true;
      for (const auto& e : s.elements()) every = every && smallFixedVectorExists({e});
      auto r = fixedVectorGroupCheck(s);
      CHECK(r.fixedVector.has_value() == every);
      CHECK(r.failingElement.has_value() != every);
      if (r.fixedVector) {
        ++hypothesisHolds;
        CHECK_FALSE(r.fixedVector->isZero());
        for (const auto& e : s.elements()) CHECK(IntVector(e * *r.fixedVector) == *r.fixedVector);
        CHECK(smallFixedVectorExists(s.elements()));
      }
    }
  }
  // D6 has 16 subgroups; trivial and the six reflection subgroups satisfy the hypothesis
  CHECK(seen.size() == 16);
  CHECK(hypothesisHolds == 7);
}
