#pragma once

#include "aniso/group.hpp"
#include "aniso/matrix.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

namespace aniso {

/// A generator handed to `closure` has infinite order.
class InfiniteOrderGenerator : public std::invalid_argument {
 public:
  explicit InfiniteOrderGenerator(const std::string& what) : std::invalid_argument(what) {}
};

inline constexpr std::size_t kDefaultClosureCap = 10'000;

/// A finite subgroup of GL_n(Z), stored as its full element list.
class MatrixGroup {
 public:
  MatrixGroup(Eigen::Index n, std::vector<IntMatrix> elements, std::vector<IntMatrix> generators);

  [[nodiscard]] Eigen::Index dim() const { return n_; }
  [[nodiscard]] std::size_t order() const { return elements_.size(); }
  [[nodiscard]] const std::vector<IntMatrix>& elements() const { return elements_; }
  [[nodiscard]] const std::vector<IntMatrix>& generators() const { return generators_; }
  [[nodiscard]] bool contains(const IntMatrix& a) const { return keys_.count(matrixKey(a)) != 0; }

 private:
  Eigen::Index n_;
  std::vector<IntMatrix> elements_;
  std::vector<IntMatrix> generators_;
  std::unordered_set<std::string> keys_;
};

/// Group generated by `gens` inside GL_n(Z). Throws InfiniteOrderGenerator or
/// CapExceeded. An empty generator list needs the dimension.
MatrixGroup closure(const std::vector<IntMatrix>& gens, std::size_t cap = kDefaultClosureCap,
                    std::optional<Eigen::Index> dim = std::nullopt);

struct MinkowskiResult {
  bool injective = true;
  std::size_t imageSize = 0;
  std::optional<IntMatrix> witness;  // non-identity element in the kernel of reduction
};

/// Reduction G -> GL_n(Z/mZ); injective iff the image has |G| elements.
MinkowskiResult minkowskiInjectionCheck(const MatrixGroup& g, std::int64_t m);

struct UpsilonSearchResult {
  unsigned n = 0;
  int entryBound = 0;
  std::size_t maxOrder = 0;
  std::vector<IntMatrix> witnessGenerators;
  std::size_t finiteOrderMatrices = 0;
  std::size_t closuresComputed = 0;
  std::size_t closuresSkipped = 0;  // CapExceeded candidates
  std::uint64_t mod3UpperBound = 0;  // |GL_n(F_3)|
};

/// Lower-bound search for the largest finite subgroup of GL_n(Z): closes every
/// pair of finite-order matrices with entries in [-B, B]. n must be 1, 2 or 3.
UpsilonSearchResult upsilonSearch(unsigned n, int entryBound, std::size_t cap = kDefaultClosureCap,
                                  unsigned threads = 0);

/// Every finite-order matrix in GL_n(Z) with entries in [-B, B], lexicographic.
std::vector<IntMatrix> finiteOrderMatrices(unsigned n, int entryBound);

struct FixedVectorResult {
  std::optional<IntVector> fixedVector;   // set when the hypothesis holds
  std::optional<IntMatrix> failingElement;  // element with no nonzero fixed vector
};

/// For G in GL_2(Z): if every element fixes a nonzero vector, returns a nonzero
/// vector fixed by the whole group; otherwise the first element (BFS order)
/// that fixes nothing.
FixedVectorResult fixedVectorGroupCheck(const MatrixGroup& g);

/// Worker count from ANISO_BOUNDS_THREADS (default: hardware concurrency).
unsigned configuredThreads();

}  // namespace aniso
