// One PASS/FAIL line per acceptance criterion; nonzero exit if any fail.
#include "acceptance.hpp"

#include <iostream>

int main() {
  int failed = 0;
  aniso::runAcceptance({}, [&](const aniso::CriterionResult& r) {
    std::cout << aniso::formatResultLine(r) << std::endl;
    failed += r.passed ? 0 : 1;
  });
  std::cout << (failed == 0 ? "all 13 criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
  return failed == 0 ? 0 : 1;
}
