#include "aniso/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace aniso {

ModMatrix reduceMod(const IntMatrix& a, std::int64_t modulus) {
  if (modulus < 2) throw std::invalid_argument("modulus must be at least 2");
  ModMatrix r;
  r.modulus = modulus;
  r.entries = a.unaryExpr([modulus](const Int& x) { return floorMod(x, modulus).toInt64(); });
  return r;
}

ModMatrix operator*(const ModMatrix& a, const ModMatrix& b) {
  if (a.modulus != b.modulus) throw std::invalid_argument("modulus mismatch");
  const std::int64_t m = a.modulus;
  ModMatrix r;
  r.modulus = m;
  r.entries.resize(a.entries.rows(), b.entries.cols());
  for (Eigen::Index i = 0; i < a.entries.rows(); ++i) {
    for (Eigen::Index j = 0; j < b.entries.cols(); ++j) {
      __int128 acc = 0;
      for (Eigen::Index k = 0; k < a.entries.cols(); ++k) {
        acc += static_cast<__int128>(a.entries(i, k)) * b.entries(k, j);
      }
      r.entries(i, j) = static_cast<std::int64_t>(acc % m);
    }
  }
  return r;
}

IntMatrix intMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
  const auto n = static_cast<Eigen::Index>(rows.size());
  const auto m = n == 0 ? 0 : static_cast<Eigen::Index>(rows.begin()->size());
  IntMatrix a(n, m);
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    if (static_cast<Eigen::Index>(row.size()) != m) throw std::invalid_argument("ragged matrix rows");
    Eigen::Index j = 0;
    for (long long x : row) a(i, j++) = Int(x);
    ++i;
  }
  return a;
}

IntVector intVector(std::initializer_list<long long> entries) {
  IntVector v(static_cast<Eigen::Index>(entries.size()));
  Eigen::Index i = 0;
  for (long long x : entries) v(i++) = Int(x);
  return v;
}

Int determinant(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant of non-square matrix");
  const Eigen::Index n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  Int sign = 1;
  Int prev = 1;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      Eigen::Index p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      m.row(k).swap(m.row(p));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      }
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

namespace {

// Row-reduces `m` in place over Q; returns the rank and the determinant sign/product.
Eigen::Index eliminate(RatMatrix& m, Rational* det) {
  const Eigen::Index rows = m.rows(), cols = m.cols();
  Eigen::Index r = 0;
  Rational d = 1;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index p = r;
    while (p < rows && m(p, c).isZero()) ++p;
    if (p == rows) {
      d = 0;
      continue;
    }
    if (p != r) {
      m.row(p).swap(m.row(r));
      d = -d;
    }
    d *= m(r, c);
    Rational inv = m(r, c).inverse();
    for (Eigen::Index i = r + 1; i < rows; ++i) {
      if (m(i, c).isZero()) continue;
      Rational f = m(i, c) * inv;
      for (Eigen::Index j = c; j < cols; ++j) m(i, j) -= f * m(r, j);
    }
    ++r;
  }
  if (det != nullptr) *det = r == rows ? d : Rational(0);
  return r;
}

}  // namespace

Rational determinant(const RatMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant of non-square matrix");
  RatMatrix m = a;
  Rational d;
  eliminate(m, &d);
  return d;
}

Eigen::Index rank(const RatMatrix& a) {
  RatMatrix m = a;
  return eliminate(m, nullptr);
}

RatMatrix inverse(const RatMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("inverse of non-square matrix");
  const Eigen::Index n = a.rows();
  RatMatrix aug(n, 2 * n);
  aug << a, RatMatrix::Identity(n, n);
  for (Eigen::Index c = 0; c < n; ++c) {
    Eigen::Index p = c;
    while (p < n && aug(p, c).isZero()) ++p;
    if (p == n) throw std::domain_error("singular matrix");
    aug.row(p).swap(aug.row(c));
    Rational inv = aug(c, c).inverse();
    aug.row(c) *= inv;
    for (Eigen::Index i = 0; i < n; ++i) {
      if (i == c || aug(i, c).isZero()) continue;
      Rational f = aug(i, c);
      aug.row(i) -= f * aug.row(c);
    }
  }
  return aug.rightCols(n);
}

IntMatrix unimodularInverse(const IntMatrix& a) {
  Int d = determinant(a);
  if (d != 1 && d != -1) throw std::domain_error("matrix is not invertible over Z");
  RatMatrix inv = inverse(toRational(a));
  return inv.unaryExpr([](const Rational& x) {
    if (!x.isInteger()) throw std::logic_error("non-integral inverse of unimodular matrix");
    return x.num();
  });
}

IntMatrix matrixPower(const IntMatrix& a, std::uint64_t exp) {
  IntMatrix result = IntMatrix::Identity(a.rows(), a.cols());
  IntMatrix base = a;
  while (exp != 0) {
    if (exp & 1U) result = (result * base).eval();
    exp >>= 1U;
    if (exp != 0) base = (base * base).eval();
  }
  return result;
}

RatMatrix toRational(const IntMatrix& a) {
  return a.unaryExpr([](const Int& x) { return Rational(x); });
}

std::string matrixKey(const IntMatrix& a) {
  std::string key;
  key.reserve(static_cast<std::size_t>(a.size()) * sizeof(std::int64_t) + 2);
  key.push_back(static_cast<char>(a.rows()));
  key.push_back(static_cast<char>(a.cols()));
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      auto raw = static_cast<unsigned __int128>(a(i, j).raw());
      for (int b = 0; b < 16; ++b) key.push_back(static_cast<char>((raw >> (8 * b)) & 0xFFU));
    }
  }
  return key;
}

std::string toText(const IntMatrix& a) {
  std::ostringstream os;
  os << '[';
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    if (i != 0) os << ',';
    os << '[';
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      if (j != 0) os << ',';
      os << a(i, j);
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

std::string toText(const IntVector& v) {
  std::ostringstream os;
  os << '(';
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i != 0) os << ',';
    os << v(i);
  }
  os << ')';
  return os.str();
}

}  // namespace aniso
