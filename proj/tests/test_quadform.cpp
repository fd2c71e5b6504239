#include "aniso/quadform.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace aniso;

namespace {

FqForm fqForm(const FiniteField& f, Eigen::Index n, std::initializer_list<std::tuple<int, int, FiniteField::Element>> cs) {
  FqForm q(f, n);
  for (auto [i, j, c] : cs) q.setCoeff(i, j, c);
  return q;
}

RatForm ratForm(Eigen::Index n, std::initializer_list<std::tuple<int, int, long long>> cs) {
  RatForm q(RationalField{}, n);
  for (auto [i, j, c] : cs) q.setCoeff(i, j, Rational(c));
  return q;
}

// Every form of dimension n over f, in order of the coefficient codes.
std::vector<FqForm> allForms(const FiniteField& f, Eigen::Index n) {
  const auto slots = static_cast<int>(n * (n + 1) / 2);
  std::uint64_t total = 1;
  for (int i = 0; i < slots; ++i) total *= f.order();
  std::vector<FqForm> out;
  for (std::uint64_t c = 0; c < total; ++c) {
    FqForm q(f, n);
    std::uint64_t x = c;
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = i; j < n; ++j) {
        q.setCoeff(i, j, static_cast<FiniteField::Element>(x % f.order()));
        x /= f.order();
      }
    }
    out.push_back(q);
  }
  return out;
}

bool nondegenerate(const FqForm& q) { return fqRank(q.field(), bilinear(q)) == q.dim(); }

FqForm randomForm(const FiniteField& f, Eigen::Index n, std::mt19937_64& rng) {
  std::uniform_int_distribution<FiniteField::Element> dist(0, f.order() - 1);
  FqForm q(f, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i; j < n; ++j) q.setCoeff(i, j, dist(rng));
  return q;
}

}  // namespace

TEST_CASE("bilinear form examples") {
  CHECK(bilinear(ratForm(1, {{0, 0, 1}})) == RatMatrix::Constant(1, 1, Rational(2)));
  RatMatrix hyp(2, 2);
  hyp << Rational(0), Rational(1), Rational(1), Rational(0);
  CHECK(bilinear(ratForm(2, {{0, 1, 1}})) == hyp);
  const FiniteField f3(3, 1);
  CHECK(bilinear(fqForm(f3, 2, {{0, 1, 1}})) == (FqMatrix(2, 2) << 0, 1, 1, 0).finished());
  const FiniteField f2(2, 1);
  CHECK(bilinear(fqForm(f2, 1, {{0, 0, 1}}))(0, 0) == 0);
}

TEST_CASE("bilinear matrix matches q(v+w) - q(v) - q(w)") {
  std::mt19937_64 rng(7);
  for (auto [p, k] : {std::pair{2U, 1U}, {2U, 2U}, {3U, 1U}, {5U, 1U}, {3U, 2U}}) {
    const FiniteField f(p, k);
    for (int trial = 0; trial < 20; ++trial) {
      FqForm q = randomForm(f, 3, rng);
      FqMatrix b = bilinear(q);
      for (Eigen::Index i = 0; i < 3; ++i) {
        for (Eigen::Index j = 0; j < 3; ++j) {
          FqVector v = FqVector::Zero(3), w = FqVector::Zero(3);
          v(i) = 1;
          w(j) = 1;
          CHECK(bilinearValue(q, v, w) == b(i, j));
          CHECK(b(i, j) == b(j, i));
        }
      }
      if (p == 2) {
        for (Eigen::Index i = 0; i < 3; ++i) CHECK(b(i, i) == 0);
      }
    }
  }
}

TEST_CASE("represents zero examples") {
  const FiniteField f3(3, 1), f5(5, 1), f2(2, 1);
  CHECK_FALSE(representsZero(fqForm(f3, 2, {{0, 0, 1}, {1, 1, 1}})));
  auto w = representsZero(fqForm(f5, 2, {{0, 0, 1}, {1, 1, 1}}));
  REQUIRE(w);
  CHECK(*w == (FqVector(2) << 1, 2).finished());
  auto w4 = representsZero(fqForm(f2, 4, {{0, 0, 1}, {0, 1, 1}, {1, 1, 1}, {2, 3, 1}}));
  REQUIRE(w4);
  CHECK_FALSE(w4->isZero());
  CHECK_THROWS_AS(representsZero(FqForm(FiniteField(13, 4), 3)), SearchSpaceTooLarge);
}

TEST_CASE("every nondegenerate form of dimension 4 over F2 is isotropic") {
  const FiniteField f2(2, 1);
  std::size_t nondeg = 0;
  for (const auto& q : allForms(f2, 4)) {
    if (!nondegenerate(q)) continue;
    ++nondeg;
    auto w = representsZero(q);
    REQUIRE(w);
    CHECK(q(*w) == 0);
  }
  CHECK(nondeg > 0);
}

TEST_CASE("reflection examples") {
  RatForm q = ratForm(2, {{0, 0, 1}, {1, 1, 1}});
  RatMatrix f1 = reflection(q, RatVector((RatVector(2) << Rational(1), Rational(0)).finished()));
  CHECK(f1 == (RatMatrix(2, 2) << Rational(-1), Rational(0), Rational(0), Rational(1)).finished());
  RatMatrix f2 = reflection(q, RatVector((RatVector(2) << Rational(1), Rational(1)).finished()));
  CHECK(f2 == (RatMatrix(2, 2) << Rational(0), Rational(-1), Rational(-1), Rational(0)).finished());
  CHECK_THROWS_AS(reflection(ratForm(2, {{0, 1, 1}}), RatVector((RatVector(2) << Rational(1), Rational(0)).finished())),
                  IsotropicAxis);
  const FiniteField f2f(2, 1);
  CHECK_THROWS_AS(reflection(fqForm(f2f, 2, {{0, 0, 1}}), FqVector((FqVector(2) << 1, 0).finished())), CharTwo);
}

TEST_CASE("reflections are isometric involutions negating the axis") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> small(-3, 3);
  int checked = 0;
  for (int trial = 0; trial < 200; ++trial) {
    RatForm q(RationalField{}, 3);
    for (Eigen::Index i = 0; i < 3; ++i)
      for (Eigen::Index j = i; j < 3; ++j) q.setCoeff(i, j, Rational(small(rng)));
    RatVector v(3);
    for (Eigen::Index i = 0; i < 3; ++i) v(i) = Rational(small(rng));
    if (q(v).isZero()) continue;
    ++checked;
    RatMatrix r = reflection(q, v);
    CHECK(RatMatrix(r * r) == RatMatrix::Identity(3, 3));
    CHECK(RatVector(r * v) == RatVector(-v));
    CHECK(transform(q, r) == q);
  }
  CHECK(checked > 100);
  const FiniteField f7(7, 1);
  for (int trial = 0; trial < 100; ++trial) {
    FqForm q = randomForm(f7, 3, rng);
    FqVector v(3);
    for (Eigen::Index i = 0; i < 3; ++i) v(i) = static_cast<FiniteField::Element>(small(rng) + 3);
    if (q(v) == 0) continue;
    FqMatrix r = reflection(q, v);
    CHECK(fqMul(f7, r, r) == fqIdentity(3));
    CHECK(transform(q, r) == q);
    FqVector rv = fqMul(f7, r, v);
    for (Eigen::Index i = 0; i < 3; ++i) CHECK(rv(i) == f7.neg(v(i)));
  }
}

TEST_CASE("Arf canonicalisation examples") {
  const FiniteField f2(2, 1), f4(2, 2);
  ArfResult hyp = arfCanonicalize(fqForm(f2, 2, {{0, 1, 1}}));
  CHECK(hyp.a == 0);
  CHECK(hyp.arfClass == 0);
  ArfResult ell = arfCanonicalize(fqForm(f2, 2, {{0, 0, 1}, {0, 1, 1}, {1, 1, 1}}));
  CHECK(ell.a == 1);
  CHECK(ell.arfClass == 1);
  const auto omega = f4.primitiveElement();
  ArfResult r4 = arfCanonicalize(fqForm(f4, 2, {{0, 0, 1}, {0, 1, 1}, {1, 1, omega}}));
  CHECK(r4.arfClass != 0);
  std::set<FiniteField::Element> image;
  for (FiniteField::Element c = 0; c < 4; ++c) image.insert(f4.sub(f4.mul(c, c), c));
  CHECK(image == std::set<FiniteField::Element>{0, 1});
  CHECK_THROWS_AS(arfCanonicalize(fqForm(f2, 3, {{0, 1, 1}})), OddDimension);
  CHECK_THROWS_AS(arfCanonicalize(fqForm(f2, 2, {{0, 0, 1}})), Degenerate);
}

TEST_CASE("Arf equivalence examples") {
  const FiniteField f2(2, 1), f4(2, 2);
  FqForm hyp = fqForm(f2, 2, {{0, 1, 1}});
  FqForm ell = fqForm(f2, 2, {{0, 0, 1}, {0, 1, 1}, {1, 1, 1}});
  CHECK_FALSE(arfEquivalence(hyp, ell));
  CHECK_FALSE(bruteForceEquivalence(hyp, ell));
  CHECK(arfEquivalence(ell, ell));
  const auto omega = f4.primitiveElement();
  FqForm a = fqForm(f4, 2, {{0, 0, 1}, {0, 1, 1}, {1, 1, omega}});
  FqForm b = fqForm(f4, 2, {{0, 0, 1}, {0, 1, 1}, {1, 1, f4.mul(omega, omega)}});
  CHECK(arfEquivalence(a, b));
  auto m = bruteForceEquivalence(a, b);
  REQUIRE(m);
  CHECK(transform(a, *m) == b);
}

TEST_CASE("Arf round trip on random nondegenerate forms") {
  std::mt19937_64 rng(3);
  for (auto k : {1U, 2U, 3U, 4U}) {
    const FiniteField f(2, k);
    for (Eigen::Index n : {2, 4, 6}) {
      int done = 0;
      while (done < 25) {
        FqForm q = randomForm(f, n, rng);
        if (!nondegenerate(q)) continue;
        ++done;
        ArfResult r = arfCanonicalize(q);
        CHECK(transform(q, r.basisChange) == arfCanonicalForm(f, n, r.a));
        CHECK(fqDet(f, r.basisChange) != 0);
        CHECK(r.arfClass == arfCoset(f, r.a));
      }
    }
  }
}

TEST_CASE("two Arf classes in dimension 2 over F2 and F4, matching brute force") {
  for (auto k : {1U, 2U}) {
    const FiniteField f(2, k);
    std::vector<FqForm> forms;
    for (const auto& q : allForms(f, 2))
      if (nondegenerate(q)) forms.push_back(q);
    // classes by brute-force equivalence
    std::vector<FqForm> reps;
    for (const auto& q : forms) {
      bool found = false;
      for (const auto& r : reps) {
        if (bruteForceEquivalence(q, r)) {
          found = true;
          CHECK(arfEquivalence(q, r));
        } else {
          CHECK_FALSE(arfEquivalence(q, r));
        }
      }
      if (!found) reps.push_back(q);
    }
    CHECK(reps.size() == 2);
  }
}

TEST_CASE("Arf equivalence matches brute force in dimension 4 over F2") {
  const FiniteField f2(2, 1);
  std::mt19937_64 rng(5);
  std::vector<FqForm> forms;
  while (forms.size() < 6) {
    FqForm q = randomForm(f2, 4, rng);
    if (nondegenerate(q)) forms.push_back(q);
  }
  for (const auto& a : forms)
    for (const auto& b : forms) CHECK(arfEquivalence(a, b) == bruteForceEquivalence(a, b).has_value());
}

TEST_CASE("order p scan examples") {
  const FiniteField f3(3, 1), f5(5, 1), f7(7, 1);
  OrderScanReport r3 = orderPScan(fqForm(f3, 2, {{0, 0, 1}, {1, 1, 1}}));
  CHECK(r3.groupOrder == 8);
  std::set<std::uint64_t> orders;
  for (auto [o, c] : r3.orderCounts) orders.insert(o);
  CHECK(orders == std::set<std::uint64_t>{1, 2, 4});
  CHECK_FALSE(r3.hasOrderP);
  CHECK_FALSE(orderPScan(fqForm(f7, 2, {{0, 0, 1}, {1, 1, 1}})).hasOrderP);
  CHECK_FALSE(orderPScan(fqForm(f5, 2, {{0, 0, 1}, {1, 1, 2}})).hasOrderP);
  CHECK_THROWS(orderPScan(fqForm(f5, 2, {{0, 0, 1}, {1, 1, 1}})));
}

TEST_CASE("no element of order p on any anisotropic binary form") {
  for (unsigned p : {3U, 5U, 7U}) {
    const FiniteField f(p, 1);
    for (const auto& q : allForms(f, 2)) {
      if (!nondegenerate(q) || representsZero(q)) continue;
      OrderScanReport r = orderPScan(q);
      CHECK_FALSE(r.hasOrderP);
      // O(q) of an anisotropic plane over F_p is dihedral of order 2(p + 1)
      CHECK(r.groupOrder == 2 * (p + 1));
    }
  }
}
