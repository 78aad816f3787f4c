#pragma once

#include <functional>
#include <string>
#include <vector>

#include "trt/oracle.hpp"

namespace trt {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

/// Runs the acceptance criteria in order, calling `report` after each one.
/// A criterion that throws counts as failed, with the error as its detail.
std::vector<CriterionResult> run_acceptance(const OracleBudget& budget,
                                            const std::function<void(const CriterionResult&)>& report = {});

/// "PASS [3] witness validity (1.2s): ..." style line.
std::string format_criterion(const CriterionResult& r);

}  // namespace trt
