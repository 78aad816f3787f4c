#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "trt/trees.hpp"
#include "trt/witness.hpp"

namespace trt {

enum class ExBranch {
  CliqueUnion,      // kK_{n-1} + K_r
  Deficit,          // (k-1)K_{n-1} + near-regular graph on n-1+r vertices
  TrivialComplete,  // p < n: K_p cannot hold an n-vertex tree
  Special,          // single closed form with a near-regular extremal graph (stars)
};

std::string_view branch_name(ExBranch b);

/// Turán number ex(p; tree) with its diagnostics.
///
/// p = k(n-1) + r with 0 <= r <= n-2 (k = 0, r = p when p < n-1).
/// For two-branch families, branch_values = {deficit, clique_union} and
/// value is their maximum; a tie is labeled Deficit with `tie` set.
struct ExResult {
  TreeSpec tree;
  std::int64_t p = 0;
  std::int64_t k = 0;
  std::int64_t r = 0;
  std::int64_t value = 0;
  ExBranch branch = ExBranch::TrivialComplete;
  bool tie = false;
  std::vector<std::int64_t> branch_values;
  WitnessDescriptor witness;
};

/// Closed-form ex(p; tree) for path, star, tprime, t1 and t2.
/// Throws FormulaDomainError for tstar (no closed form here) and for orders
/// below a family's formula domain; InvalidArgument for p < 0.
ExResult ex_value(const TreeSpec& tree, std::int64_t p);

/// floor((n-2)p/2) - (n-1+r) versus ((n-2)p - r(n-1-r))/2, both exact.
std::int64_t deficit_branch_value(std::int64_t n, std::int64_t p);
std::int64_t clique_union_value(std::int64_t n, std::int64_t p);

/// The T1/T2 formula written as max of the two branches.
std::int64_t ex_t1t2_max_form(std::int64_t n, std::int64_t p);
/// The same quantity via its stated case split on (n, r).
std::int64_t ex_t1t2_piecewise(std::int64_t n, std::int64_t p);
/// True exactly when the case split selects the deficit branch.
bool t1t2_deficit_case(std::int64_t n, std::int64_t r);

/// Bracket for ex(p; T1/T2) when p >= n >= 5 and (n-1) does not divide p.
struct ExBounds {
  std::int64_t lo_numerator = 0;  // lower bound = lo_numerator / lo_denominator, reduced
  std::int64_t lo_denominator = 1;
  std::int64_t lo = 0;            // ceiling of the rational lower bound
  std::int64_t hi = 0;
};
ExBounds ex_bounds(const TreeSpec& tree, std::int64_t p);

struct HypothesisCheck {
  std::string condition;
  bool holds = false;
};

/// Which inequality regime (n, r) falls in, and the sign of
/// r(n-3-r) - 2(n-1), the quantity deciding between the two branches.
struct CaseExplanation {
  ExBranch branch = ExBranch::CliqueUnion;
  bool tie = false;
  std::int64_t r = 0;
  std::int64_t discriminant = 0;
  int sign = 0;
  std::string regime;
  std::vector<HypothesisCheck> trace;
};
CaseExplanation ex_case_explain(const TreeSpec& tree, std::int64_t p);

}  // namespace trt
