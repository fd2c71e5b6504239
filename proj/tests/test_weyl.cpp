#include "aniso/weyl.hpp"

#include <doctest.h>

#include <map>
#include <random>
#include <string>

using namespace aniso;

namespace {

// Word rewriting: words over {u, v} with coefficients in Z/p[x, y]; apply
// vu -> uv + 1 until sorted, then u^p -> y, v^p -> x.
using Coef = std::map<std::pair<unsigned, unsigned>, int>;
using Words = std::map<std::string, Coef>;

void addCoef(Coef& into, const Coef& c, int sign, unsigned p) {
  for (const auto& [m, v] : c) {
    int& slot = into[m];
    slot = ((slot + sign * v) % static_cast<int>(p) + static_cast<int>(p)) % static_cast<int>(p);
    if (slot == 0) into.erase(m);
  }
}

WeylElement rewrite(const std::string& word, unsigned p) {
  Words todo{{word, Coef{{{0, 0}, 1}}}};
  Words done;
  while (!todo.empty()) {
    auto [w, c] = *todo.begin();
    todo.erase(todo.begin());
    const auto pos = w.find("vu");
    if (pos == std::string::npos) {
      addCoef(done[w], c, 1, p);
      continue;
    }
    addCoef(todo[w.substr(0, pos) + "uv" + w.substr(pos + 2)], c, 1, p);
    addCoef(todo[w.substr(0, pos) + w.substr(pos + 2)], c, 1, p);
  }
  WeylElement out(p);
  for (const auto& [w, c] : done) {
    const auto nu = static_cast<unsigned>(std::count(w.begin(), w.end(), 'u'));
    const auto nv = static_cast<unsigned>(w.size()) - nu;
    CentralPoly poly(p, 0);
    for (const auto& [m, v] : c) poly += CentralPoly::monomial(p, m.first + nv / p, m.second + nu / p, static_cast<unsigned>(v));
    if (!poly.isZero()) out += WeylElement::basis(p, nu % p, nv % p, poly);
  }
  return out;
}

std::string randomWord(std::mt19937_64& rng, int len) {
  std::string w;
  for (int i = 0; i < len; ++i) w += (rng() % 2 == 0) ? 'u' : 'v';
  return w;
}

}  // namespace

TEST_CASE("normal form examples") {
  CHECK(weylNormalForm("vu", 2) == weylNormalForm("uv + 1", 2));
  CHECK(weylNormalForm("vu", 2).str() == "1 + uv");
  CHECK(weylNormalForm("v*v", 2) == WeylElement::scalar(CentralPoly::monomial(2, 1, 0)));
  CHECK(weylNormalForm("v(uv)", 2) == weylNormalForm("x*u + v", 2));
  CHECK(weylNormalForm("u^3", 3).str() == "y");
  CHECK(weylNormalForm("3u", 3).isZero());
  CHECK(weylNormalForm("-(u - u)", 5).isZero());
  CHECK_THROWS(weylNormalForm("uw", 2));
  CHECK_THROWS(weylNormalForm("u v", 4));
}

TEST_CASE("multiplication agrees with word rewriting") {
  std::mt19937_64 rng(17);
  for (unsigned p : {2U, 3U, 5U}) {
    for (int trial = 0; trial < 60; ++trial) {
      const std::string w = randomWord(rng, 1 + static_cast<int>(rng() % 9));
      WeylElement product = WeylElement::scalar(CentralPoly(p, 1));
      for (char c : w) product = product * (c == 'u' ? WeylElement::u(p) : WeylElement::v(p));
      CHECK(product == rewrite(w, p));
      CHECK(weylNormalForm(w, p) == product);
    }
  }
}

TEST_CASE("associativity on random basis triples") {
  std::mt19937_64 rng(23);
  for (unsigned p : {2U, 3U, 5U}) {
    for (int trial = 0; trial < 100; ++trial) {
      auto pick = [&] {
        const auto i = static_cast<unsigned>(rng() % p), j = static_cast<unsigned>(rng() % p);
        const CentralPoly c = CentralPoly::monomial(p, static_cast<unsigned>(rng() % 2), static_cast<unsigned>(rng() % 2),
                                                    1 + static_cast<unsigned>(rng() % (p - 1)));
        return WeylElement::basis(p, i, j, c);
      };
      const WeylElement a = pick() + pick(), b = pick(), c = pick() + pick();
      CHECK((a * b) * c == a * (b * c));
    }
  }
}

TEST_CASE("defining relations and the p-th power identity") {
  for (unsigned p : {2U, 3U, 5U}) {
    const WeylElement u = WeylElement::u(p), v = WeylElement::v(p);
    CHECK(commutator(v, u) == WeylElement::scalar(CentralPoly(p, 1)));
    CHECK(pow(v, p) == WeylElement::scalar(CentralPoly::monomial(p, 1, 0)));
    CHECK(pow(u, p) == WeylElement::scalar(CentralPoly::monomial(p, 0, 1)));
    WeylIdentityReport r = weylIdentityCheck(p);
    CHECK(r.holds());
  }
}

TEST_CASE("centraliser of the generators") {
  for (unsigned p : {2U, 3U, 5U}) {
    const WeylElement u = WeylElement::u(p), v = WeylElement::v(p);
    for (unsigned i = 0; i < p; ++i) {
      for (unsigned j = 0; j < p; ++j) {
        const WeylElement m = WeylElement::basis(p, i, j, CentralPoly(p, 1));
        const bool central = commutator(m, u).isZero() && commutator(m, v).isZero();
        CHECK(central == (i == 0 && j == 0));
      }
    }
    const WeylElement c = WeylElement::scalar(CentralPoly::monomial(p, 2, 1, 1) + CentralPoly(p, 1));
    CHECK(commutator(c, u).isZero());
    CHECK(commutator(c, v).isZero());
  }
}

TEST_CASE("ad v solve and nilpotency") {
  AdSolveReport r2 = adSolve(2);
  CHECK(r2.verified);
  CHECK(r2.preimage == WeylElement::u(2));
  CHECK(r2.nilpotencyIndex == 2);
  for (unsigned p : {3U, 5U}) {
    AdSolveReport r = adSolve(p);
    CHECK(r.verified);
    CHECK(r.nilpotencyIndex == p);
    CHECK(commutator(WeylElement::v(p), r.preimage) == WeylElement::scalar(CentralPoly(p, 1)));
  }
  // (ad v)^2 kills every basis monomial for p = 2
  const WeylElement v = WeylElement::v(2);
  for (unsigned i = 0; i < 2; ++i)
    for (unsigned j = 0; j < 2; ++j)
      CHECK(commutator(v, commutator(v, WeylElement::basis(2, i, j, CentralPoly(2, 1)))).isZero());
}
