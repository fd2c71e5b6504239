#include "aniso/snf.hpp"

#include <optional>
#include <stdexcept>

namespace aniso {

namespace {

struct Pos {
  Eigen::Index row, col;
};

std::optional<Pos> smallestNonzero(const IntMatrix& a, Eigen::Index from) {
  std::optional<Pos> best;
  Int bestAbs = 0;
  for (Eigen::Index i = from; i < a.rows(); ++i) {
    for (Eigen::Index j = from; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      Int v = abs(a(i, j));
      if (!best || v < bestAbs) {
        best = Pos{i, j};
        bestAbs = v;
      }
    }
  }
  return best;
}

}  // namespace

std::vector<Int> SnfDecomposition::invariantFactors() const {
  std::vector<Int> d;
  for (Eigen::Index i = 0; i < std::min(S.rows(), S.cols()); ++i) d.push_back(S(i, i));
  return d;
}

Eigen::Index SnfDecomposition::rank() const {
  Eigen::Index r = 0;
  for (const Int& d : invariantFactors()) r += d != 0 ? 1 : 0;
  return r;
}

SnfDecomposition snf(const IntMatrix& a) {
  const Eigen::Index m = a.rows(), n = a.cols();
  IntMatrix s = a;
  IntMatrix u = IntMatrix::Identity(m, m);
  IntMatrix v = IntMatrix::Identity(n, n);

  for (Eigen::Index t = 0; t < std::min(m, n); ++t) {
    for (;;) {
      auto pivot = smallestNonzero(s, t);
      if (!pivot) return {s, u, v};
      if (pivot->row != t) {
        s.row(t).swap(s.row(pivot->row));
        u.row(t).swap(u.row(pivot->row));
      }
      if (pivot->col != t) {
        s.col(t).swap(s.col(pivot->col));
        v.col(t).swap(v.col(pivot->col));
      }
      const Int p = s(t, t);
      bool clean = true;
      for (Eigen::Index i = t + 1; i < m; ++i) {
        if (s(i, t) == 0) continue;
        Int q = s(i, t) / p;
        if (q != 0) {
          s.row(i) -= q * s.row(t);
          u.row(i) -= q * u.row(t);
        }
        clean = clean && s(i, t) == 0;
      }
      for (Eigen::Index j = t + 1; j < n; ++j) {
        if (s(t, j) == 0) continue;
        Int q = s(t, j) / p;
        if (q != 0) {
          s.col(j) -= q * s.col(t);
          v.col(j) -= q * v.col(t);
        }
        clean = clean && s(t, j) == 0;
      }
      if (!clean) continue;  // a smaller remainder exists; re-pivot

      // Enforce divisibility of the trailing block by the pivot.
      bool divides = true;
      for (Eigen::Index i = t + 1; i < m && divides; ++i) {
        for (Eigen::Index j = t + 1; j < n; ++j) {
          if (s(i, j) % p != 0) {
            s.row(t) += s.row(i);
            u.row(t) += u.row(i);
            divides = false;
            break;
          }
        }
      }
      if (!divides) continue;
      if (p < 0) {
        s.row(t) = -s.row(t);
        u.row(t) = -u.row(t);
      }
      break;
    }
  }
  return {s, u, v};
}

IntMatrix integerKernel(const IntMatrix& a) {
  SnfDecomposition d = snf(a);
  const Eigen::Index r = d.rank();
  return d.V.rightCols(a.cols() - r);
}

IntMatrix solveIntegral(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("row count mismatch in solveIntegral");
  SnfDecomposition d = snf(a);
  // S (V^-1 X) = U B
  IntMatrix ub = d.U * b;
  IntMatrix y = IntMatrix::Zero(a.cols(), b.cols());
  const Eigen::Index r = d.rank();
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < b.cols(); ++j) {
      if (i < r) {
        if (ub(i, j) % d.S(i, i) != 0) throw std::domain_error("no integral solution");
        y(i, j) = ub(i, j) / d.S(i, i);
      } else if (ub(i, j) != 0) {
        throw std::domain_error("inconsistent linear system");
      }
    }
  }
  return d.V * y;
}

}  // namespace aniso
