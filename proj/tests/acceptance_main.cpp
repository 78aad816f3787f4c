#include <iostream>

#include "trt/acceptance.hpp"

int main() {
  const auto budget = trt::OracleBudget::from_env();
  bool ok = true;
  trt::run_acceptance(budget, [&](const trt::CriterionResult& r) {
    std::cout << trt::format_criterion(r) << std::endl;
    ok = ok && r.passed;
  });
  return ok ? 0 : 1;
}
