#include "aniso/torus.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <set>

using namespace aniso;

namespace {

const IntMatrix kRot4 = intMatrix({{0, -1}, {1, 0}});
const IntMatrix kRot6 = intMatrix({{1, -1}, {1, 0}});
const IntMatrix kSwap = intMatrix({{0, 1}, {1, 0}});

IntMatrix minusI(Eigen::Index n) { return -identity<Int>(n); }

// Every distinct subgroup generated by at most two of the given matrices.
std::vector<std::vector<IntMatrix>> twoGeneratedGroups(const std::vector<IntMatrix>& mats) {
  std::set<std::set<std::string>> seen;
  std::vector<std::vector<IntMatrix>> out;
  for (std::size_t i = 0; i < mats.size(); ++i) {
    for (std::size_t j = i; j < mats.size(); ++j) {
      std::vector<IntMatrix> gens{mats[i], mats[j]};
      try {
        MatrixGroup g = closure(gens);
        std::set<std::string> keys;
        for (const auto& e : g.elements()) keys.insert(matrixKey(e));
        if (seen.insert(keys).second) out.push_back(gens);
      } catch (const CapExceeded&) {
      }
    }
  }
  return out;
}

std::vector<std::vector<IntMatrix>> rank2Groups() { return twoGeneratedGroups(finiteOrderMatrices(2, 1)); }

std::vector<std::vector<IntMatrix>> rank3Groups() {
  MatrixGroup cube = closure({intMatrix({{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}), intMatrix({{0, -1, 0}, {1, 0, 0}, {0, 0, 1}}),
                              minusI(3)});
  return twoGeneratedGroups(cube.elements());
}

}  // namespace

TEST_CASE("anisotropy examples") {
  CHECK(isAnisotropic(GaloisLattice(2, {minusI(2)})));
  CHECK_FALSE(isAnisotropic(GaloisLattice(2, {})));
  CHECK(isAnisotropic(GaloisLattice(2, {kRot4})));
  CHECK_FALSE(isAnisotropic(GaloisLattice(2, {kSwap})));
  CHECK_THROWS(GaloisLattice(5, {}));
  CHECK_THROWS_AS(GaloisLattice(2, {intMatrix({{1, 1}, {0, 1}})}), InfiniteOrderGenerator);
}

TEST_CASE("torsion profile examples") {
  TorsionProfile pm = torsionProfile(GaloisLattice(2, {minusI(2)}), 12);
  CHECK(pm.entries.size() == 11);
  CHECK(pm.entries.front().d == 2);
  CHECK(pm.entries.front().exactOrderCount == 3);
  for (const auto& e : pm.entries)
    if (e.d >= 3) CHECK(e.exactOrderCount == 0);
  CHECK(pm.maxExactOrder == 2);

  TorsionProfile split = torsionProfile(GaloisLattice(1, {}), 12);
  for (const auto& e : split.entries) CHECK(e.exactOrderCount == static_cast<std::uint64_t>(eulerPhi(e.d)));
  CHECK(split.maxExactOrder == 12);

  TorsionProfile hex = torsionProfile(GaloisLattice(2, {kRot6, kSwap}), 12);
  CHECK(hex.maxExactOrder <= 6);
  CHECK(hex.entries[5 - 2].exactOrderCount == 0);

  TorsionProfile rank1 = torsionProfile(GaloisLattice(1, {minusI(1)}));
  CHECK(rank1.maxExactOrder == 2);
  CHECK(rank1.dMax == 60);

  CHECK_THROWS(torsionProfile(GaloisLattice(1, {}), 61));
}

TEST_CASE("characteristic metadata") {
  TorsionProfile p = torsionProfile(GaloisLattice(1, {}), 12, 3);
  for (const auto& e : p.entries) CHECK(e.characteristicDivides == (e.d % 3 == 0));
}

TEST_CASE("torsion counts agree with exhaustive enumeration") {
  for (const auto& gens : rank2Groups()) {
    GaloisLattice l(2, gens);
    TorsionProfile p = torsionProfile(l, 12);
    for (const auto& e : p.entries) {
      std::uint64_t exact = 0, all = 0;
      oracle::forEachModVector(e.d, 2, [&](const std::vector<std::int64_t>& v) {
        if (!oracle::fixedMod(gens, v, e.d)) return;
        ++all;
        if (oracle::trialOrder(v, e.d) == e.d) ++exact;
      });
      CHECK(e.exactOrderCount == exact);
      CHECK(e.invariantCount == all);
    }
  }
}

TEST_CASE("anisotropy dichotomy and order bounds in rank 2") {
  auto groups = rank2Groups();
  CHECK(groups.size() > 10);
  for (const auto& gens : groups) {
    GaloisLattice l(2, gens);
    TorsionProfile p = torsionProfile(l);
    bool everyOrder = true;
    for (const auto& e : p.entries) everyOrder = everyOrder && e.exactOrderCount > 0;
    CHECK(isAnisotropic(l) == !everyOrder);
    if (isAnisotropic(l)) {
      CHECK(p.maxExactOrder <= 6);
      CHECK(p.entries[5 - 2].exactOrderCount == 0);
      for (const auto& e : p.entries) CHECK(e.invariantCount <= 36);
    }
  }
}

TEST_CASE("order bounds in rank 3") {
  for (const auto& gens : rank3Groups()) {
    GaloisLattice l(3, gens);
    if (!isAnisotropic(l)) continue;
    TorsionProfile p = torsionProfile(l);
    CHECK(p.maxExactOrder <= 48);
    for (const auto& e : p.entries) CHECK(e.invariantCount <= 48ULL * 48 * 48);
  }
}

TEST_CASE("trace vector") {
  CHECK(traceVector(GaloisLattice(2, {minusI(2)}), intVector({1, 0})) == intVector({0, 0}));
  CHECK(traceVector(GaloisLattice(2, {kSwap}), intVector({1, 0})) == intVector({1, 1}));
  CHECK(traceVector(GaloisLattice(2, {}), intVector({2, 3})) == intVector({2, 3}));
}

TEST_CASE("trace vector guarantee on invariant classes of large order") {
  for (const auto& gens : rank2Groups()) {
    GaloisLattice l(2, gens);
    const auto order = static_cast<std::int64_t>(l.gamma().order());
    for (std::int64_t d = order + 1; d <= 14; ++d) {
      for (const auto& v : kernelMod(gens, 2, d)) {
        if (v.order != d) continue;
        // any lift: shift the representative by d in the first coordinate
        IntVector lift = intVector({v.entries[0] + d, v.entries[1]});
        IntVector w = traceVector(l, lift);
        CHECK_FALSE(w.isZero());
        for (int i = 0; i < 2; ++i) {
          const Int expect = Int(order) * Int(v.entries[static_cast<std::size_t>(i)]);
          CHECK(floorMod(w(i) - expect, Int(d)) == 0);
        }
      }
    }
  }
}

TEST_CASE("h1 examples") {
  H1Result sign = h1Cyclic(GaloisLattice(1, {minusI(1)}));
  CHECK(sign.cyclicFactors == std::vector<Int>{2});
  CHECK(sign.annihilatedByOrder);
  CHECK(h1Cyclic(GaloisLattice(2, {})).cyclicFactors.empty());
  CHECK(h1Cyclic(GaloisLattice(2, {kSwap})).cyclicFactors.empty());
  CHECK(h1Cyclic(GaloisLattice(2, {minusI(2)})).cyclicFactors == std::vector<Int>{2, 2});
  CHECK_THROWS_AS(h1Cyclic(GaloisLattice(2, {kRot6, kSwap})), NotCyclic);
}

TEST_CASE("h1 of cyclic actions against reduction mod the group order") {
  std::vector<IntMatrix> mats = finiteOrderMatrices(2, 1);
  MatrixGroup cube = closure({intMatrix({{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}), intMatrix({{0, -1, 0}, {1, 0, 0}, {0, 0, 1}}),
                              minusI(3)});
  mats.insert(mats.end(), cube.elements().begin(), cube.elements().end());
  for (const auto& s : mats) {
    const auto n = s.rows();
    GaloisLattice l(n, {s});
    H1Result h = h1Cyclic(l);
    CHECK(h.annihilatedByOrder);
    const auto r = static_cast<std::int64_t>(h.groupOrder);
    if (r == 1) {
      CHECK(h.cyclicFactors.empty());
      continue;
    }
    IntMatrix norm = IntMatrix::Zero(n, n);
    for (const auto& g : l.gamma().elements()) norm += g;
    // H^1 embeds in L/rL as (ker N + rL) / (im(s - 1) + rL)
    std::vector<std::vector<std::int64_t>> kernelGens, imageGens;
    std::vector<std::int64_t> box(static_cast<std::size_t>(n), -2);
    for (;;) {
      IntVector v(n);
      for (Eigen::Index i = 0; i < n; ++i) v(i) = box[static_cast<std::size_t>(i)];
      if (IntVector(norm * v).isZero()) {
        std::vector<std::int64_t> x;
        for (Eigen::Index i = 0; i < n; ++i) x.push_back(v(i).toInt64());
        kernelGens.push_back(x);
      }
      std::size_t k = 0;
      while (k < box.size() && box[k] == 2) box[k++] = -2;
      if (k == box.size()) break;
      ++box[k];
    }
    for (Eigen::Index c = 0; c < n; ++c) {
      IntVector col = s.col(c) - IntMatrix::Identity(n, n).col(c);
      std::vector<std::int64_t> x;
      for (Eigen::Index i = 0; i < n; ++i) x.push_back(col(i).toInt64());
      imageGens.push_back(x);
    }
    const auto un = static_cast<std::size_t>(n);
    const std::size_t expected = oracle::spanSizeMod(kernelGens, r, un) / oracle::spanSizeMod(imageGens, r, un);
    CHECK(h.size() == Int(static_cast<long long>(expected)));
  }
}
