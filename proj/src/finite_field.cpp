#include "aniso/finite_field.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace aniso {

namespace {

using Poly = std::vector<unsigned>;  // constant term first, coefficients in [0, p)

void trimPoly(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly polyMod(Poly a, const Poly& m, unsigned p) {
  trimPoly(a);
  const std::size_t dm = m.size() - 1;
  // m is monic
  while (a.size() > dm) {
    const unsigned c = a.back();
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) a[shift + i] = (a[shift + i] + (p - c) * m[i]) % p;
    trimPoly(a);
  }
  return a;
}

Poly polyMulMod(const Poly& a, const Poly& b, const Poly& m, unsigned p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  return polyMod(r, m, p);
}

Poly codeToPoly(std::uint32_t code, unsigned p, unsigned k) {
  Poly a(k, 0);
  for (unsigned i = 0; i < k; ++i) {
    a[i] = code % p;
    code /= p;
  }
  trimPoly(a);
  return a;
}

std::uint32_t polyToCode(const Poly& a, unsigned p) {
  std::uint32_t code = 0;
  for (std::size_t i = a.size(); i-- > 0;) code = code * p + a[i];
  return code;
}

}  // namespace

bool isPrime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool isIrreducible(const std::vector<unsigned>& poly, unsigned p) {
  Poly f = poly;
  trimPoly(f);
  const std::size_t deg = f.size() - 1;
  if (deg < 1) return false;
  // trial division by every monic polynomial of degree 1 .. deg/2
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    std::uint32_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint32_t c = 0; c < count; ++c) {
      Poly g(d + 1, 0);
      std::uint32_t x = c;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = x % p;
        x /= p;
      }
      g[d] = 1;
      if (polyMod(f, g, p).empty()) return false;
    }
  }
  return true;
}

std::vector<unsigned> smallestIrreducible(unsigned p, unsigned k) {
  std::uint32_t count = 1;
  for (unsigned i = 0; i < k; ++i) count *= p;
  for (std::uint32_t c = 0; c < count; ++c) {
    Poly f(k + 1, 0);
    std::uint32_t x = c;
    for (unsigned i = 0; i < k; ++i) {
      f[i] = x % p;
      x /= p;
    }
    f[k] = 1;
    if (isIrreducible(f, p)) return f;
  }
  throw std::logic_error("no irreducible polynomial found");
}

FiniteField::FiniteField(unsigned p, unsigned k) : p_(p), k_(k), q_(1) {
  if (!isPrime(p) || p > 13) throw std::invalid_argument("field characteristic must be a prime <= 13");
  if (k < 1 || k > 4) throw std::invalid_argument("extension degree must be between 1 and 4");
  for (unsigned i = 0; i < k; ++i) q_ *= p;
  auto t = std::make_shared<Tables>();
  t->modulus = smallestIrreducible(p, k);
  const Poly m(t->modulus.begin(), t->modulus.end());
  // first code whose powers exhaust the multiplicative group
  for (Element g = 1; g < q_; ++g) {
    std::vector<Element> exp;
    exp.reserve(q_ - 1);
    std::vector<bool> seen(q_, false);
    Poly cur{1};
    const Poly gp = codeToPoly(g, p, k);
    bool ok = true;
    for (Element i = 0; i + 1 < q_; ++i) {
      Element c = polyToCode(cur, p);
      if (seen[c]) {
        ok = false;
        break;
      }
      seen[c] = true;
      exp.push_back(c);
      cur = polyMulMod(cur, gp, m, p);
    }
    if (!ok) continue;
    t->primitive = g;
    t->log.assign(q_, 0);
    for (Element i = 0; i + 1 < q_; ++i) t->log[exp[i]] = i;
    t->exp = exp;
    t->exp.insert(t->exp.end(), exp.begin(), exp.end());
    break;
  }
  tables_ = std::move(t);
}

FiniteField::Element FiniteField::fromInt(std::int64_t v) const {
  auto r = static_cast<Element>(((v % static_cast<std::int64_t>(p_)) + p_) % p_);
  return r;
}

FiniteField::Element FiniteField::add(Element a, Element b) const {
  Element r = 0, scale = 1;
  for (unsigned i = 0; i < k_; ++i) {
    r += ((a % p_ + b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return r;
}

FiniteField::Element FiniteField::neg(Element a) const {
  Element r = 0, scale = 1;
  for (unsigned i = 0; i < k_; ++i) {
    r += ((p_ - a % p_) % p_) * scale;
    a /= p_;
    scale *= p_;
  }
  return r;
}

FiniteField::Element FiniteField::sub(Element a, Element b) const { return add(a, neg(b)); }

FiniteField::Element FiniteField::inv(Element a) const {
  if (a == 0) throw std::domain_error("inverse of zero in finite field");
  return tables_->exp[(q_ - 1 - tables_->log[a]) % (q_ - 1)];
}

FiniteField::Element FiniteField::pow(Element a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  return tables_->exp[static_cast<std::uint32_t>((static_cast<std::uint64_t>(tables_->log[a]) * (e % (q_ - 1))) % (q_ - 1))];
}

FiniteField::Element FiniteField::sqrtChar2(Element a) const {
  if (p_ != 2) throw std::domain_error("square root helper is for characteristic 2");
  Element r = a;
  for (unsigned i = 1; i < k_; ++i) r = mul(r, r);
  return r;
}

std::uint64_t FiniteField::multiplicativeOrder(Element a) const {
  if (a == 0) throw std::domain_error("zero has no multiplicative order");
  std::uint64_t n = q_ - 1;
  std::uint64_t l = tables_->log[a];
  std::uint64_t g = n;
  for (std::uint64_t x = l; x != 0;) {
    std::uint64_t t = g % x;
    g = x;
    x = t;
  }
  return n / g;
}

std::vector<unsigned> FiniteField::digits(Element a) const {
  std::vector<unsigned> d(k_, 0);
  for (unsigned i = 0; i < k_; ++i) {
    d[i] = a % p_;
    a /= p_;
  }
  return d;
}

std::string FiniteField::format(Element a) const {
  if (a == 0) return "0";
  const auto d = digits(a);
  std::string out;
  for (unsigned i = k_; i-- > 0;) {
    if (d[i] == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0) {
      out += std::to_string(d[i]);
      continue;
    }
    if (d[i] != 1) out += std::to_string(d[i]);
    out += "w";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

FiniteField::Element FiniteField::parse(std::string_view text) const {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c)) && c != '*') s.push_back(c);
  if (s.empty()) throw std::invalid_argument("empty field element");
  std::vector<std::int64_t> coeff(k_, 0);
  std::size_t i = 0;
  auto readInt = [&](std::int64_t& out) {
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (start == i) return false;
    out = std::stoll(s.substr(start, i - start));
    return true;
  };
  while (i < s.size()) {
    std::int64_t sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    }
    std::int64_t c = 1;
    const bool hasCoeff = readInt(c);
    std::int64_t e = 0;
    if (i < s.size() && (s[i] == 'w' || s[i] == 'W')) {
      if (k_ == 1) throw std::invalid_argument("prime field has no generator symbol w: " + s);
      ++i;
      e = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        if (!readInt(e)) throw std::invalid_argument("bad exponent in field element: " + s);
      }
    } else if (!hasCoeff) {
      throw std::invalid_argument("cannot parse field element: " + s);
    }
    if (e >= static_cast<std::int64_t>(k_)) {
      // reduce w^e through the field multiplication
      const Element w = p_;
      Element term = mul(fromInt(sign * c), pow(w, static_cast<std::uint64_t>(e)));
      auto d = digits(term);
      for (unsigned j = 0; j < k_; ++j) coeff[j] += d[j];
      continue;
    }
    coeff[static_cast<std::size_t>(e)] += sign * c;
  }
  Element r = 0;
  for (unsigned j = k_; j-- > 0;) r = r * p_ + fromInt(coeff[j]);
  return r;
}

FqMatrix fqIdentity(Eigen::Index n) {
  FqMatrix a = FqMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) a(i, i) = 1;
  return a;
}

FqMatrix fqMul(const FiniteField& f, const FqMatrix& a, const FqMatrix& b) {
  FqMatrix r(a.rows(), b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < b.cols(); ++j) {
      FiniteField::Element acc = 0;
      for (Eigen::Index k = 0; k < a.cols(); ++k) acc = f.add(acc, f.mul(a(i, k), b(k, j)));
      r(i, j) = acc;
    }
  return r;
}

FqVector fqMul(const FiniteField& f, const FqMatrix& a, const FqVector& v) {
  FqMatrix r = fqMul(f, a, FqMatrix(v));
  return r.col(0);
}

namespace {

// Gaussian elimination; returns rank, and the determinant when square.
Eigen::Index fqEliminate(const FiniteField& f, FqMatrix& m, FiniteField::Element* det) {
  Eigen::Index r = 0;
  FiniteField::Element d = 1;
  for (Eigen::Index c = 0; c < m.cols() && r < m.rows(); ++c) {
    Eigen::Index p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r) {
      m.row(p).swap(m.row(r));
      d = f.neg(d);
    }
    d = f.mul(d, m(r, c));
    const auto inv = f.inv(m(r, c));
    for (Eigen::Index i = r + 1; i < m.rows(); ++i) {
      if (m(i, c) == 0) continue;
      const auto factor = f.mul(m(i, c), inv);
      for (Eigen::Index j = c; j < m.cols(); ++j) m(i, j) = f.sub(m(i, j), f.mul(factor, m(r, j)));
    }
    ++r;
  }
  if (det != nullptr) *det = r == m.rows() ? d : 0;
  return r;
}

}  // namespace

FiniteField::Element fqDet(const FiniteField& f, const FqMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant of non-square matrix");
  FqMatrix m = a;
  FiniteField::Element d = 0;
  fqEliminate(f, m, &d);
  return d;
}

Eigen::Index fqRank(const FiniteField& f, const FqMatrix& a) {
  FqMatrix m = a;
  return fqEliminate(f, m, nullptr);
}

FqMatrix fqInverse(const FiniteField& f, const FqMatrix& a) {
  const Eigen::Index n = a.rows();
  FqMatrix aug(n, 2 * n);
  aug << a, fqIdentity(n);
  for (Eigen::Index c = 0; c < n; ++c) {
    Eigen::Index p = c;
    while (p < n && aug(p, c) == 0) ++p;
    if (p == n) throw std::domain_error("singular matrix over finite field");
    aug.row(p).swap(aug.row(c));
    const auto inv = f.inv(aug(c, c));
    for (Eigen::Index j = 0; j < 2 * n; ++j) aug(c, j) = f.mul(aug(c, j), inv);
    for (Eigen::Index i = 0; i < n; ++i) {
      if (i == c || aug(i, c) == 0) continue;
      const auto factor = aug(i, c);
      for (Eigen::Index j = 0; j < 2 * n; ++j) aug(i, j) = f.sub(aug(i, j), f.mul(factor, aug(c, j)));
    }
  }
  return aug.rightCols(n);
}

std::string fqKey(const FqMatrix& a) {
  std::string key;
  key.reserve(static_cast<std::size_t>(a.size()) * 2 + 1);
  key.push_back(static_cast<char>(a.rows()));
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      key.push_back(static_cast<char>(a(i, j) & 0xFFU));
      key.push_back(static_cast<char>((a(i, j) >> 8) & 0xFFU));
    }
  return key;
}

std::vector<FqMatrix> generalLinearGroup(const FiniteField& f, Eigen::Index n) {
  const std::uint64_t q = f.order();
  std::uint64_t total = 1;
  for (Eigen::Index i = 0; i < n * n; ++i) {
    total *= q;
    if (total > 50'000'000ULL) throw std::invalid_argument("matrix space too large to enumerate");
  }
  std::vector<FqMatrix> out;
  FqMatrix m = FqMatrix::Zero(n, n);
  for (std::uint64_t c = 0; c < total; ++c) {
    std::uint64_t x = c;
    // row-major, last entry least significant, so the sequence is lexicographic
    for (Eigen::Index idx = n * n; idx-- > 0;) {
      m(idx / n, idx % n) = static_cast<FiniteField::Element>(x % q);
      x /= q;
    }
    if (fqDet(f, m) != 0) out.push_back(m);
  }
  return out;
}

std::uint64_t generalLinearOrder(std::uint64_t q, unsigned n) {
  std::uint64_t order = 1, qn = 1;
  for (unsigned i = 0; i < n; ++i) qn *= q;
  std::uint64_t qi = 1;
  for (unsigned i = 0; i < n; ++i) {
    order *= qn - qi;
    qi *= q;
  }
  return order;
}

}  // namespace aniso
