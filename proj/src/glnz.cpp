#include "aniso/glnz.hpp"

#include "aniso/finite_field.hpp"
#include "aniso/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <iterator>
#include <mutex>
#include <thread>

namespace aniso {

MatrixGroup::MatrixGroup(Eigen::Index n, std::vector<IntMatrix> elements, std::vector<IntMatrix> generators)
    : n_(n), elements_(std::move(elements)), generators_(std::move(generators)) {
  for (const auto& e : elements_) keys_.insert(matrixKey(e));
}

namespace {

auto multiply = [](const IntMatrix& a, const IntMatrix& b) -> IntMatrix { return a * b; };

// A^L == I, L = lcm{d : phi(d) <= n}: necessary for finite order in GL_n(Z).
struct FiniteOrderTest {
  std::uint64_t exponent;
  bool operator()(const IntMatrix& a) const {
    // eigenvalues are roots of unity, so |tr A| <= n
    if (abs(Int(a.trace())) > Int(static_cast<long long>(a.rows()))) return false;
    try {
      return matrixPower(a, exponent) == IntMatrix::Identity(a.rows(), a.cols());
    } catch (const OverflowError&) {
      return false;
    }
  }
};

}  // namespace

MatrixGroup closure(const std::vector<IntMatrix>& gens, std::size_t cap, std::optional<Eigen::Index> dim) {
  if (gens.empty() && !dim) throw std::invalid_argument("closure of no generators needs a dimension");
  const Eigen::Index n = gens.empty() ? *dim : gens.front().rows();
  for (const auto& g : gens) {
    if (g.rows() != n || g.cols() != n) throw std::invalid_argument("generator dimension mismatch");
    if (!matrixOrder(g)) throw InfiniteOrderGenerator("generator " + toText(g) + " has infinite order");
  }
  FiniteOrderTest finite{finiteOrderExponent(static_cast<unsigned>(n))};
  auto elems = closeUnder(gens, IntMatrix(IntMatrix::Identity(n, n)), multiply, matrixKey, cap, finite);
  return {n, std::move(elems), gens};
}

MinkowskiResult minkowskiInjectionCheck(const MatrixGroup& g, std::int64_t m) {
  if (m < 2) throw std::invalid_argument("modulus must be at least 2");
  MinkowskiResult r;
  std::unordered_map<std::string, std::size_t> image;
  const IntMatrix id = IntMatrix::Identity(g.dim(), g.dim());
  const std::string idKey = matrixKey(reduceMod(id, m).entries.cast<Int>());
  for (std::size_t i = 0; i < g.elements().size(); ++i) {
    const IntMatrix& e = g.elements()[i];
    std::string key = matrixKey(reduceMod(e, m).entries.cast<Int>());
    if (!r.witness && e != id && key == idKey) r.witness = e;
    image.emplace(std::move(key), i);
  }
  r.imageSize = image.size();
  r.injective = r.imageSize == g.order();
  if (!r.injective && !r.witness) {
    // two distinct elements collide; their quotient lies in the kernel
    std::unordered_map<std::string, std::size_t> seen;
    for (std::size_t i = 0; i < g.elements().size() && !r.witness; ++i) {
      std::string key = matrixKey(reduceMod(g.elements()[i], m).entries.cast<Int>());
      auto [it, fresh] = seen.emplace(key, i);
      if (!fresh) r.witness = IntMatrix(g.elements()[i] * unimodularInverse(g.elements()[it->second]));
    }
  }
  return r;
}

std::vector<IntMatrix> finiteOrderMatrices(unsigned n, int entryBound) {
  if (n < 1 || n > 6) throw std::invalid_argument("dimension must be between 1 and 6");
  if (entryBound < 0) throw std::invalid_argument("entry bound must be non-negative");
  const std::int64_t base = 2 * entryBound + 1;
  const unsigned cells = n * n;
  std::uint64_t total = 1;
  for (unsigned i = 0; i < cells; ++i) {
    total *= static_cast<std::uint64_t>(base);
    if (total > 100'000'000ULL) throw std::invalid_argument("search space too large");
  }
  std::vector<IntMatrix> out;
  IntMatrix a(n, n);
  const auto dim = static_cast<Eigen::Index>(n);
  for (std::uint64_t c = 0; c < total; ++c) {
    std::uint64_t x = c;
    for (Eigen::Index idx = dim * dim; idx-- > 0;) {
      a(idx / dim, idx % dim) = static_cast<long long>(x % static_cast<std::uint64_t>(base)) - entryBound;
      x /= static_cast<std::uint64_t>(base);
    }
    Int det = determinant(a);
    if (det != 1 && det != -1) continue;
    if (matrixOrder(a)) out.push_back(a);
  }
  return out;
}

unsigned configuredThreads() {
  if (const char* env = std::getenv("ANISO_BOUNDS_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<unsigned>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

UpsilonSearchResult upsilonSearch(unsigned n, int entryBound, std::size_t cap, unsigned threads) {
  if (n < 1 || n > 3) throw std::invalid_argument("upsilon search supports ranks 1 to 3");
  if (entryBound < 1) throw std::invalid_argument("entry bound must be at least 1");
  UpsilonSearchResult result;
  result.n = n;
  result.entryBound = entryBound;
  result.mod3UpperBound = generalLinearOrder(3, n);

  // One generator per cyclic subgroup: <a, b> depends only on <a> and <b>.
  std::vector<IntMatrix> all = finiteOrderMatrices(n, entryBound);
  result.finiteOrderMatrices = all.size();
  std::vector<IntMatrix> reps;
  std::vector<std::unordered_set<std::string>> cyclic;
  {
    std::unordered_set<std::string> covered;
    for (const auto& a : all) {
      if (covered.count(matrixKey(a)) != 0) continue;
      MatrixGroup c = closure({a}, cap);
      std::unordered_set<std::string> keys;
      for (const auto& e : c.elements()) {
        keys.insert(matrixKey(e));
        // generators of the same cyclic group share it
        if (matrixOrder(e) == c.order()) covered.insert(matrixKey(e));
      }
      reps.push_back(a);
      cyclic.push_back(std::move(keys));
    }
  }

  const unsigned workers = std::max(1U, threads == 0 ? configuredThreads() : threads);
  struct Best {
    std::size_t order = 0;
    std::size_t i = 0, j = 0;
    std::size_t computed = 0, skipped = 0;
  };
  std::vector<Best> best(workers);
  auto work = [&](unsigned w) {
    Best& b = best[w];
    // element -> groups already found by this worker that contain it; a pair
    // inside one of them is redundant
    std::unordered_map<std::string, std::vector<std::size_t>> member;
    std::size_t groups = 0;
    static const std::vector<std::size_t> none;
    auto groupsOf = [&](const std::string& k) -> const std::vector<std::size_t>& {
      auto it = member.find(k);
      return it == member.end() ? none : it->second;
    };
    for (std::size_t i = w; i < reps.size(); i += workers) {
      const std::string ki = matrixKey(reps[i]);
      for (std::size_t j = i; j < reps.size(); ++j) {
        const std::string kj = matrixKey(reps[j]);
        if (j != i && cyclic[i].count(kj) != 0) continue;
        const auto& gi = groupsOf(ki);
        const auto& gj = groupsOf(kj);
        std::vector<std::size_t> both;
        std::set_intersection(gi.begin(), gi.end(), gj.begin(), gj.end(), std::back_inserter(both));
        if (!both.empty()) continue;
        try {
          MatrixGroup g = closure(i == j ? std::vector<IntMatrix>{reps[i]} : std::vector<IntMatrix>{reps[i], reps[j]}, cap);
          ++b.computed;
          if (g.order() > b.order || (g.order() == b.order && std::pair(i, j) < std::pair(b.i, b.j))) {
            b.order = g.order();
            b.i = i;
            b.j = j;
          }
          for (const auto& e : g.elements()) member[matrixKey(e)].push_back(groups);
          ++groups;
        } catch (const CapExceeded&) {
          ++b.skipped;
        }
      }
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  Best top;
  for (const auto& b : best) {
    result.closuresComputed += b.computed;
    result.closuresSkipped += b.skipped;
    if (b.order > top.order || (b.order == top.order && b.order != 0 && std::pair(b.i, b.j) < std::pair(top.i, top.j))) {
      top.order = b.order;
      top.i = b.i;
      top.j = b.j;
    }
  }
  result.maxOrder = top.order;
  if (top.order != 0) {
    result.witnessGenerators.push_back(reps[top.i]);
    if (top.j != top.i) result.witnessGenerators.push_back(reps[top.j]);
  }
  return result;
}

FixedVectorResult fixedVectorGroupCheck(const MatrixGroup& g) {
  if (g.dim() != 2) throw std::invalid_argument("fixed vector check is for rank 2 lattices");
  FixedVectorResult r;
  for (const auto& e : g.elements()) {
    if (invariantSublattice({e}, 2).cols() == 0) {
      r.failingElement = e;
      return r;
    }
  }
  IntMatrix basis = invariantSublattice(g.elements(), 2);
  if (basis.cols() == 0) throw std::logic_error("every element fixes a vector but the group fixes none");
  r.fixedVector = basis.col(0);
  return r;
}

}  // namespace aniso
