#include "aniso/quadform.hpp"

#include <charconv>

namespace aniso {

RationalField::Element RationalField::parse(std::string_view text) const {
  auto toInt = [&](std::string_view t) {
    long long v = 0;
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc() || ptr != t.data() + t.size() || t.empty())
      throw std::invalid_argument("bad rational '" + std::string(text) + "'");
    return Int(v);
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return toInt(text);
  return {toInt(text.substr(0, slash)), toInt(text.substr(slash + 1))};
}

namespace {

using Elem = FiniteField::Element;

std::uint64_t searchSize(std::uint64_t q, Eigen::Index n, std::uint64_t limit) {
  std::uint64_t total = 1;
  for (Eigen::Index i = 0; i < n; ++i) {
    total *= q;
    if (total > limit) throw SearchSpaceTooLarge("search space exceeds " + std::to_string(limit));
  }
  return total;
}

// Decode c into base-q digits, first coordinate most significant.
void decode(std::uint64_t c, std::uint64_t q, FqVector& v) {
  for (Eigen::Index i = v.size(); i-- > 0;) {
    v(i) = static_cast<Elem>(c % q);
    c /= q;
  }
}

FqVector axpy(const FiniteField& f, Elem a, const FqVector& x, const FqVector& y) {
  FqVector out(y.size());
  for (Eigen::Index i = 0; i < y.size(); ++i) out(i) = f.add(f.mul(a, x(i)), y(i));
  return out;
}

FqVector scale(const FiniteField& f, Elem a, const FqVector& x) {
  return axpy(f, a, x, FqVector::Zero(x.size()));
}

// A nonzero isotropic vector in span(basis); B alternating and nondegenerate
// there, dimension at least 3.
FqVector isotropicVector(const FqForm& q, const std::vector<FqVector>& basis) {
  const FiniteField& f = q.field();
  for (const auto& w : basis)
    if (q(w) == 0) return w;
  const FqVector& x = basis[0];
  std::size_t k = 1;
  while (k < basis.size() && bilinearValue(q, x, basis[k]) == 0) ++k;
  if (k == basis.size()) throw Degenerate("form is degenerate");
  const std::size_t j = k == 1 ? 2 : 1;
  // y orthogonal to x and independent of it
  const FqVector y = axpy(f, f.neg(f.div(bilinearValue(q, x, basis[j]), bilinearValue(q, x, basis[k]))), basis[k], basis[j]);
  // q(x + t y) = q(x) + t^2 q(y) since B(x, y) = 0
  if (q(y) == 0) return y;
  const Elem t = f.sqrtChar2(f.div(q(x), q(y)));
  return axpy(f, t, y, x);
}

}  // namespace

std::optional<FqVector> representsZero(const FqForm& q) {
  const FiniteField& f = q.field();
  const std::uint64_t total = searchSize(f.order(), q.dim(), 10'000'000ULL);
  FqVector v(q.dim());
  for (std::uint64_t c = 1; c < total; ++c) {
    decode(c, f.order(), v);
    if (q(v) == 0) return v;
  }
  return std::nullopt;
}

FqForm arfCanonicalForm(const FiniteField& f, Eigen::Index dim, Elem a) {
  if (dim % 2 != 0) throw OddDimension("canonical form needs even dimension");
  FqForm q(f, dim);
  q.setCoeff(0, 0, 1);
  q.setCoeff(0, 1, 1);
  q.setCoeff(1, 1, a);
  for (Eigen::Index i = 2; i < dim; i += 2) q.setCoeff(i, i + 1, 1);
  return q;
}

Elem arfCoset(const FiniteField& f, Elem a) {
  if (f.characteristic() != 2) throw std::domain_error("Arf invariant needs characteristic 2");
  Elem best = a;
  for (Elem c = 0; c < f.order(); ++c) best = std::min(best, f.add(a, f.sub(f.mul(c, c), c)));
  return best;
}

ArfResult arfCanonicalize(const FqForm& q) {
  const FiniteField& f = q.field();
  if (f.characteristic() != 2) throw std::domain_error("Arf canonicalisation needs characteristic 2");
  const Eigen::Index n = q.dim();
  if (n % 2 != 0) throw OddDimension("form has odd dimension " + std::to_string(n));
  if (fqRank(f, bilinear(q)) != n) throw Degenerate("associated bilinear form is degenerate");

  std::vector<FqVector> rest;
  for (Eigen::Index i = 0; i < n; ++i) rest.push_back(FqMatrix::Identity(n, n).col(i).cast<Elem>());
  std::vector<FqVector> hyperbolic;
  while (rest.size() > 2) {
    const FqVector e = isotropicVector(q, rest);
    std::size_t k = 0;
    while (bilinearValue(q, e, rest[k]) == 0) ++k;
    FqVector g = scale(f, f.inv(bilinearValue(q, e, rest[k])), rest[k]);
    g = axpy(f, q(g), e, g);  // now q(g) = 0, B(e, g) = 1
    hyperbolic.push_back(e);
    hyperbolic.push_back(g);
    // project onto the orthogonal complement of span(e, g) and keep a basis
    std::vector<FqVector> next;
    FqMatrix span(n, 0);
    for (const auto& w : rest) {
      FqVector p = axpy(f, bilinearValue(q, w, g), e, w);
      p = axpy(f, bilinearValue(q, w, e), g, p);
      FqMatrix trial(n, span.cols() + 1);
      trial << span, p;
      if (fqRank(f, trial) == trial.cols()) {
        span = trial;
        next.push_back(p);
      }
    }
    rest = std::move(next);
  }

  // final plane: e with q(e) = 1, then f with B(e, f) = 1
  const FqVector& x = rest[0];
  const FqVector& y = rest[1];
  FqVector e;
  if (q(x) != 0) {
    e = scale(f, f.inv(f.sqrtChar2(q(x))), x);
  } else if (q(y) != 0) {
    e = scale(f, f.inv(f.sqrtChar2(q(y))), y);
  } else {
    e = axpy(f, f.inv(bilinearValue(q, x, y)), y, x);
  }
  const FqVector& other = bilinearValue(q, e, x) != 0 ? x : y;
  const FqVector g = scale(f, f.inv(bilinearValue(q, e, other)), other);

  ArfResult r;
  r.a = q(g);
  r.basisChange = FqMatrix(n, n);
  r.basisChange.col(0) = e;
  r.basisChange.col(1) = g;
  for (std::size_t i = 0; i < hyperbolic.size(); ++i) r.basisChange.col(static_cast<Eigen::Index>(i) + 2) = hyperbolic[i];
  r.arfClass = arfCoset(f, r.a);
  if (!(transform(q, r.basisChange) == arfCanonicalForm(f, n, r.a)))
    throw std::logic_error("Arf reduction failed to reach the canonical form");
  return r;
}

bool arfEquivalence(const FqForm& q1, const FqForm& q2) {
  if (!(q1.field() == q2.field())) throw std::invalid_argument("forms over different fields");
  if (q1.dim() != q2.dim()) throw std::invalid_argument("forms of different dimension");
  return arfCanonicalize(q1).arfClass == arfCanonicalize(q2).arfClass;
}

std::optional<FqMatrix> bruteForceEquivalence(const FqForm& q1, const FqForm& q2) {
  if (!(q1.field() == q2.field()) || q1.dim() != q2.dim()) throw std::invalid_argument("incompatible forms");
  const FiniteField& f = q1.field();
  if (generalLinearOrder(f.order(), static_cast<unsigned>(q1.dim())) > 1'000'000ULL)
    throw SearchSpaceTooLarge("GL_n(F_q) has more than 10^6 elements");
  for (const auto& m : generalLinearGroup(f, q1.dim()))
    if (transform(q1, m) == q2) return m;
  return std::nullopt;
}

OrderScanReport orderPScan(const FqForm& q) {
  const FiniteField& f = q.field();
  if (f.degree() != 1 || f.characteristic() == 2) throw std::invalid_argument("order scan needs an odd prime field");
  if (representsZero(q)) throw std::invalid_argument("form is isotropic");
  const Eigen::Index n = q.dim();
  const std::uint64_t total = searchSize(f.order(), n * n, 10'000'000ULL);
  OrderScanReport r;
  r.p = f.characteristic();
  FqVector flat(n * n);
  FqMatrix m(n, n);
  const FqMatrix id = fqIdentity(n);
  for (std::uint64_t c = 0; c < total; ++c) {
    decode(c, f.order(), flat);
    for (Eigen::Index i = 0; i < n * n; ++i) m(i / n, i % n) = flat(i);
    if (!(transform(q, m) == q)) continue;  // preserving a nondegenerate q forces invertibility
    if (fqDet(f, m) == 0) continue;
    std::uint64_t ord = 1;
    for (FqMatrix p = m; !(p == id); p = fqMul(f, p, m)) ++ord;
    ++r.groupOrder;
    ++r.orderCounts[ord];
    if (ord % r.p == 0) r.hasOrderP = true;
  }
  return r;
}

}  // namespace aniso
