#include "aniso/weyl.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace aniso {

namespace {

void checkPrime(unsigned p) {
  if (p != 2 && p != 3 && p != 5 && p != 7) throw std::invalid_argument("Weyl algebra prime must be 2, 3, 5 or 7");
}

unsigned reduce(std::int64_t c, unsigned p) {
  const auto m = static_cast<std::int64_t>(p);
  return static_cast<unsigned>(((c % m) + m) % m);
}

std::uint64_t binomial(unsigned n, unsigned k) {
  std::uint64_t r = 1;
  for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::string powerText(char var, unsigned e) {
  if (e == 0) return "";
  if (e == 1) return std::string(1, var);
  return std::string(1, var) + "^" + std::to_string(e);
}

}  // namespace

CentralPoly::CentralPoly(unsigned p, std::int64_t c) : p_(p) { add({0, 0}, c); }

CentralPoly CentralPoly::monomial(unsigned p, unsigned dx, unsigned dy, unsigned c) {
  CentralPoly r(p, 0);
  r.add({dx, dy}, c);
  return r;
}

void CentralPoly::add(const Monomial& m, std::int64_t c) {
  const unsigned v = (terms_.count(m) != 0 ? terms_[m] : 0) + reduce(c, p_);
  if (v % p_ == 0) {
    terms_.erase(m);
  } else {
    terms_[m] = v % p_;
  }
}

bool CentralPoly::isConstant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{0, 0}); }

unsigned CentralPoly::constantTerm() const {
  auto it = terms_.find({0, 0});
  return it == terms_.end() ? 0 : it->second;
}

std::string CentralPoly::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  // highest degree first
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto [dx, dy] = it->first;
    const unsigned c = it->second;
    if (!s.empty()) s += "+";
    std::string mono = powerText('x', dx);
    const std::string ys = powerText('y', dy);
    if (!mono.empty() && !ys.empty()) mono += "*";
    mono += ys;
    if (mono.empty()) {
      s += std::to_string(c);
    } else {
      s += (c == 1 ? "" : std::to_string(c) + "*") + mono;
    }
  }
  return s;
}

CentralPoly& CentralPoly::operator+=(const CentralPoly& o) {
  p_ = o.p_;
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

CentralPoly& CentralPoly::operator-=(const CentralPoly& o) {
  p_ = o.p_;
  for (const auto& [m, c] : o.terms_) add(m, -static_cast<std::int64_t>(c));
  return *this;
}

CentralPoly operator*(const CentralPoly& a, const CentralPoly& b) {
  CentralPoly r(a.p_, 0);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add({ma.first + mb.first, ma.second + mb.second}, std::int64_t{ca} * cb);
  return r;
}

WeylElement::WeylElement(unsigned p) : p_(p) { checkPrime(p); }

WeylElement WeylElement::scalar(const CentralPoly& c) { return basis(c.prime(), 0, 0, c); }
WeylElement WeylElement::u(unsigned p) { return basis(p, 1, 0, CentralPoly(p, 1)); }
WeylElement WeylElement::v(unsigned p) { return basis(p, 0, 1, CentralPoly(p, 1)); }

WeylElement WeylElement::basis(unsigned p, unsigned i, unsigned j, const CentralPoly& c) {
  if (i >= p || j >= p) throw std::invalid_argument("basis exponent out of range");
  WeylElement e(p);
  e.addTerm({i, j}, c);
  return e;
}

void WeylElement::addTerm(const Monomial& m, const CentralPoly& c) {
  CentralPoly sum = coefficient(m.first, m.second) + c;
  if (sum.isZero()) {
    terms_.erase(m);
  } else {
    terms_[m] = sum;
  }
}

CentralPoly WeylElement::coefficient(unsigned i, unsigned j) const {
  auto it = terms_.find({i, j});
  return it == terms_.end() ? CentralPoly(p_, 0) : it->second;
}

std::string WeylElement::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [m, c] : terms_) {
    if (!s.empty()) s += " + ";
    const std::string mono = powerText('u', m.first) + powerText('v', m.second);
    if (mono.empty()) {
      s += c.str();
    } else if (c == CentralPoly(p_, 1)) {
      s += mono;
    } else if (c.terms().size() == 1) {
      s += c.str() + "*" + mono;
    } else {
      s += "(" + c.str() + ")*" + mono;
    }
  }
  return s;
}

WeylElement& WeylElement::operator+=(const WeylElement& o) {
  for (const auto& [m, c] : o.terms_) addTerm(m, c);
  return *this;
}

WeylElement& WeylElement::operator-=(const WeylElement& o) {
  for (const auto& [m, c] : o.terms_) addTerm(m, CentralPoly(p_, 0) - c);
  return *this;
}

WeylElement operator*(const WeylElement& a, const WeylElement& b) {
  if (a.p_ != b.p_) throw std::invalid_argument("Weyl elements over different primes");
  const unsigned p = a.p_;
  WeylElement r(p);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      const CentralPoly c = ca * cb;
      // u^a v^b u^c v^d with v^b u^c = sum_k C(b,k) C(c,k) k! u^(c-k) v^(b-k)
      const unsigned bv = ma.second, cu = mb.first;
      std::uint64_t fact = 1;
      for (unsigned k = 0; k <= std::min(bv, cu); ++k) {
        if (k > 0) fact = fact * k % p;
        const std::uint64_t coef = binomial(bv, k) % p * (binomial(cu, k) % p) % p * fact % p;
        if (coef == 0) continue;
        const unsigned ue = ma.first + cu - k;
        const unsigned ve = bv - k + mb.second;
        // u^p = y, v^p = x
        r.addTerm({ue % p, ve % p}, c * CentralPoly::monomial(p, ve / p, ue / p, static_cast<unsigned>(coef)));
      }
    }
  }
  return r;
}

WeylElement pow(const WeylElement& a, unsigned e) {
  WeylElement r = WeylElement::scalar(CentralPoly(a.prime(), 1));
  for (unsigned i = 0; i < e; ++i) r = r * a;
  return r;
}

WeylElement commutator(const WeylElement& a, const WeylElement& b) { return a * b - b * a; }

namespace {

class Parser {
 public:
  Parser(std::string_view text, unsigned p) : text_(text), p_(p) {}

  WeylElement parse() {
    WeylElement e = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("bad Weyl expression at offset " + std::to_string(pos_) + ": " + why);
  }
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])) != 0) ++pos_;
  }
  char peek() {
    skip();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  WeylElement expr() {
    WeylElement e(p_);
    bool negate = false;
    if (peek() == '-') {
      ++pos_;
      negate = true;
    } else if (peek() == '+') {
      ++pos_;
    }
    e = term();
    if (negate) e = WeylElement(p_) - e;
    for (;;) {
      const char c = peek();
      if (c != '+' && c != '-') return e;
      ++pos_;
      if (c == '+') {
        e += term();
      } else {
        e -= term();
      }
    }
  }

  WeylElement term() {
    WeylElement e = factor();
    for (;;) {
      const char c = peek();
      if (c == '*') {
        ++pos_;
        e = e * factor();
      } else if (c == '(' || c == 'u' || c == 'v' || c == 'x' || c == 'y' || std::isdigit(static_cast<unsigned char>(c)) != 0) {
        e = e * factor();
      } else {
        return e;
      }
    }
  }

  WeylElement factor() {
    WeylElement base = atom();
    if (peek() == '^') {
      ++pos_;
      skip();
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])) != 0) ++pos_;
      if (start == pos_) fail("exponent expected");
      base = pow(base, static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start)))));
    }
    return base;
  }

  WeylElement atom() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      WeylElement e = expr();
      if (peek() != ')') fail("')' expected");
      ++pos_;
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) != 0) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])) != 0) ++pos_;
      const auto n = std::stoll(std::string(text_.substr(start, pos_ - start)));
      return WeylElement::scalar(CentralPoly(p_, n));
    }
    ++pos_;
    switch (c) {
      case 'u':
        return WeylElement::u(p_);
      case 'v':
        return WeylElement::basis(p_, 0, 1, CentralPoly(p_, 1));
      case 'x':
        return WeylElement::scalar(CentralPoly::monomial(p_, 1, 0));
      case 'y':
        return WeylElement::scalar(CentralPoly::monomial(p_, 0, 1));
      default:
        --pos_;
        fail(c == '\0' ? "unexpected end" : "unexpected '" + std::string(1, c) + "'");
    }
  }

  std::string_view text_;
  unsigned p_;
  std::size_t pos_ = 0;
};

}  // namespace

WeylElement weylNormalForm(std::string_view expr, unsigned p) {
  checkPrime(p);
  return Parser(expr, p).parse();
}

WeylIdentityReport weylIdentityCheck(unsigned p) {
  checkPrime(p);
  const WeylElement u = WeylElement::u(p);
  const WeylElement v = WeylElement::v(p);
  const WeylElement uv = u * v;
  return {p, pow(uv, p) - uv - pow(u, p) * pow(v, p)};
}

AdSolveReport adSolve(unsigned p) {
  checkPrime(p);
  AdSolveReport r;
  r.p = p;
  const unsigned dim = p * p;
  const WeylElement v = WeylElement::v(p);
  // column t holds ad v (u^i v^j), t = i*p + j
  std::vector<std::vector<unsigned>> a(dim, std::vector<unsigned>(dim, 0));
  for (unsigned i = 0; i < p; ++i) {
    for (unsigned j = 0; j < p; ++j) {
      const WeylElement image = commutator(v, WeylElement::basis(p, i, j, CentralPoly(p, 1)));
      for (const auto& [m, c] : image.terms()) {
        // ad v is F_p[x,y]-linear; on this basis its matrix has constant entries
        if (!c.isConstant()) throw std::logic_error("ad v has a non-constant matrix entry");
        a[m.first * p + m.second][i * p + j] = c.constantTerm();
      }
    }
  }
  r.adMatrix = a;

  // nilpotency: apply ad v repeatedly to every basis monomial in the algebra
  r.nilpotencyIndex = 0;
  for (unsigned k = 1; k <= dim + 1 && r.nilpotencyIndex == 0; ++k) {
    bool allZero = true;
    for (unsigned i = 0; i < p && allZero; ++i) {
      for (unsigned j = 0; j < p && allZero; ++j) {
        WeylElement w = WeylElement::basis(p, i, j, CentralPoly(p, 1));
        for (unsigned t = 0; t < k; ++t) w = commutator(v, w);
        allZero = w.isZero();
      }
    }
    if (allZero) r.nilpotencyIndex = k;
  }

  // solve A z = e_0 over F_p by Gauss-Jordan, free variables set to zero
  const FiniteField fp(p, 1);
  std::vector<std::vector<unsigned>> m = a;
  std::vector<unsigned> rhs(dim, 0);
  rhs[0] = 1;
  std::vector<int> pivotCol(dim, -1);
  unsigned row = 0;
  for (unsigned col = 0; col < dim && row < dim; ++col) {
    unsigned piv = row;
    while (piv < dim && m[piv][col] == 0) ++piv;
    if (piv == dim) continue;
    std::swap(m[piv], m[row]);
    std::swap(rhs[piv], rhs[row]);
    const unsigned inv = fp.inv(m[row][col]);
    for (auto& x : m[row]) x = fp.mul(x, inv);
    rhs[row] = fp.mul(rhs[row], inv);
    for (unsigned other = 0; other < dim; ++other) {
      if (other == row || m[other][col] == 0) continue;
      const unsigned f = m[other][col];
      for (unsigned c = 0; c < dim; ++c) m[other][c] = fp.sub(m[other][c], fp.mul(f, m[row][c]));
      rhs[other] = fp.sub(rhs[other], fp.mul(f, rhs[row]));
    }
    pivotCol[row] = static_cast<int>(col);
    ++row;
  }
  for (unsigned rr = row; rr < dim; ++rr)
    if (rhs[rr] != 0) throw std::logic_error("1 is not in the image of ad v");
  WeylElement z(p);
  for (unsigned rr = 0; rr < row; ++rr) {
    if (rhs[rr] == 0) continue;
    const auto t = static_cast<unsigned>(pivotCol[rr]);
    z += WeylElement::basis(p, t / p, t % p, CentralPoly(p, rhs[rr]));
  }
  r.preimage = z;
  r.verified = commutator(v, z) == WeylElement::scalar(CentralPoly(p, 1));
  return r;
}

}  // namespace aniso
