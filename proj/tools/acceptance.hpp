#pragma once

#include <functional>
#include <string>
#include <vector>

namespace aniso {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

inline constexpr int kCriterionCount = 13;

/// Runs one acceptance criterion (1..13). Exceptions become failures.
CriterionResult runCriterion(int id);

/// Runs the listed criteria (all when empty) in order, calling `onResult`
/// after each one.
std::vector<CriterionResult> runAcceptance(const std::vector<int>& ids = {},
                                           const std::function<void(const CriterionResult&)>& onResult = {});

/// "PASS  3 minkowski injectivity  (0.12 s)  <detail>"
std::string formatResultLine(const CriterionResult& r);

}  // namespace aniso
