#pragma once
// Brute-force reference computations used only by the test suites. They
// deliberately avoid the library's algorithms (no SNF, no cyclotomic
// factorisation) so they can check them independently.

#include "aniso/matrix.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using aniso::Int;
using aniso::IntMatrix;

/// Order by repeated multiplication, giving up after `cap` steps.
inline std::optional<std::uint64_t> naiveOrder(const IntMatrix& a, std::uint64_t cap = 10000) {
  const IntMatrix id = IntMatrix::Identity(a.rows(), a.cols());
  IntMatrix p = a;
  try {
    for (std::uint64_t k = 1; k <= cap; ++k) {
      if (p == id) return k;
      p = (p * a).eval();
    }
  } catch (const aniso::OverflowError&) {
    // entries grew past 128 bits: certainly not of finite order
  }
  return std::nullopt;
}

/// Cofactor-expansion determinant.
inline Int cofactorDet(const IntMatrix& a) {
  const auto n = a.rows();
  if (n == 0) return 1;
  if (n == 1) return a(0, 0);
  Int d = 0;
  for (Eigen::Index j = 0; j < n; ++j) {
    IntMatrix minor(n - 1, n - 1);
    for (Eigen::Index r = 1; r < n; ++r) {
      Eigen::Index c2 = 0;
      for (Eigen::Index c = 0; c < n; ++c) {
        if (c == j) continue;
        minor(r - 1, c2++) = a(r, c);
      }
    }
    Int term = a(0, j) * cofactorDet(minor);
    d += (j % 2 == 0) ? term : -term;
  }
  return d;
}

inline void forEachSubset(int n, int k, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> idx(static_cast<std::size_t>(k));
  std::function<void(int, int)> rec = [&](int start, int depth) {
    if (depth == k) {
      f(idx);
      return;
    }
    for (int i = start; i < n; ++i) {
      idx[static_cast<std::size_t>(depth)] = i;
      rec(i + 1, depth + 1);
    }
  };
  rec(0, 0);
}

/// k-th determinantal divisor: gcd of all k x k minors.
inline Int determinantalDivisor(const IntMatrix& a, int k) {
  Int g = 0;
  forEachSubset(static_cast<int>(a.rows()), k, [&](const std::vector<int>& rows) {
    forEachSubset(static_cast<int>(a.cols()), k, [&](const std::vector<int>& cols) {
      IntMatrix m(k, k);
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) m(i, j) = a(rows[static_cast<std::size_t>(i)], cols[static_cast<std::size_t>(j)]);
      g = aniso::gcd(g, cofactorDet(m));
    });
  });
  return g;
}

/// Invariant factors from determinantal divisors: d_k / d_{k-1}.
inline std::vector<Int> invariantFactorsByMinors(const IntMatrix& a) {
  std::vector<Int> out;
  Int prev = 1;
  const auto r = std::min(a.rows(), a.cols());
  for (Eigen::Index k = 1; k <= r; ++k) {
    Int dk = determinantalDivisor(a, static_cast<int>(k));
    if (dk == 0) {
      out.push_back(0);
      prev = 0;
      continue;
    }
    out.push_back(dk / prev);
    prev = dk;
  }
  return out;
}

/// Visits every vector of (Z/dZ)^n.
inline void forEachModVector(std::int64_t d, int n, const std::function<void(const std::vector<std::int64_t>&)>& f) {
  std::vector<std::int64_t> v(static_cast<std::size_t>(n), 0);
  for (;;) {
    f(v);
    std::size_t k = 0;
    while (k < v.size() && ++v[k] == d) v[k++] = 0;
    if (k == v.size()) return;
  }
}

inline bool fixedMod(const std::vector<IntMatrix>& gens, const std::vector<std::int64_t>& v, std::int64_t d) {
  for (const auto& g : gens) {
    for (Eigen::Index i = 0; i < g.rows(); ++i) {
      Int s = 0;
      for (Eigen::Index j = 0; j < g.cols(); ++j) s += g(i, j) * Int(v[static_cast<std::size_t>(j)]);
      if (aniso::floorMod(s - Int(v[static_cast<std::size_t>(i)]), d) != 0) return false;
    }
  }
  return true;
}

inline IntMatrix randomMatrix(std::mt19937_64& rng, Eigen::Index rows, Eigen::Index cols, int bound) {
  std::uniform_int_distribution<int> dist(-bound, bound);
  IntMatrix a(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) a(i, j) = dist(rng);
  return a;
}

/// Random unimodular matrix built from elementary operations.
inline IntMatrix randomUnimodular(std::mt19937_64& rng, Eigen::Index n, int steps) {
  IntMatrix u = IntMatrix::Identity(n, n);
  std::uniform_int_distribution<Eigen::Index> idx(0, n - 1);
  std::uniform_int_distribution<int> mult(-1, 1);
  for (int s = 0; s < steps && n > 1; ++s) {
    Eigen::Index i = idx(rng), j = idx(rng);
    if (i == j) continue;
    u.row(i) += Int(mult(rng)) * u.row(j);
  }
  return u;
}

/// Smallest m > 0 with m v = 0 in (Z/dZ)^n, by trial multiplication.
inline std::int64_t trialOrder(const std::vector<std::int64_t>& v, std::int64_t d) {
  for (std::int64_t m = 1;; ++m) {
    bool zero = true;
    for (auto x : v) zero = zero && (m * x) % d == 0;
    if (zero) return m;
  }
}

/// Size of the subgroup of (Z/rZ)^n spanned by `gens`, by saturation.
inline std::size_t spanSizeMod(const std::vector<std::vector<std::int64_t>>& gens, std::int64_t r, std::size_t n) {
  std::set<std::vector<std::int64_t>> span{std::vector<std::int64_t>(n, 0)};
  std::vector<std::vector<std::int64_t>> frontier(span.begin(), span.end());
  while (!frontier.empty()) {
    std::vector<std::vector<std::int64_t>> next;
    for (const auto& x : frontier) {
      for (const auto& g : gens) {
        std::vector<std::int64_t> y(n);
        for (std::size_t i = 0; i < n; ++i) y[i] = ((x[i] + g[i]) % r + r) % r;
        if (span.insert(y).second) next.push_back(y);
      }
    }
    frontier = std::move(next);
  }
  return span.size();
}

}  // namespace oracle
