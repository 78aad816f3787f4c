#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "trt/constructions.hpp"
#include "trt/trees.hpp"
#include "trt/witness.hpp"

namespace trt {

enum class RamseyKind { Exact, Range, Unknown };

std::string_view kind_name(RamseyKind k);

struct RuleCheck {
  std::string rule;
  std::string condition;
  bool holds = false;
};

/// r(left, right) as far as the rule table determines it.
///
/// Exact: lo == hi == value. Range: lo <= hi. Unknown: only `lo` (a maximum
/// degree bound) may be known, `hi` is empty.
struct RamseyAnswer {
  TreeSpec left;
  TreeSpec right;
  RamseyKind kind = RamseyKind::Unknown;
  std::optional<std::int64_t> lo;
  std::optional<std::int64_t> hi;
  std::string rule;
  std::vector<RuleCheck> trace;
  std::optional<WitnessDescriptor> witness;
  std::string annotation;

  std::optional<std::int64_t> value() const {
    if (kind == RamseyKind::Exact) return lo;
    return std::nullopt;
  }
};

/// Evaluates every rule in a fixed priority order, fires the first exact
/// rule (else the first range rule), and checks that every other applicable
/// rule agrees with it. Queries are taken as ordered pairs.
///
/// Throws InternalConsistencyError when two applicable rules disagree and
/// InvalidArgument for orders below a family minimum.
RamseyAnswer ramsey_value(const TreeSpec& left, const TreeSpec& right);

/// The rule labels in priority order.
const std::vector<std::string>& ramsey_rule_order();

struct TuranSum {
  bool holds = false;  // ex_left + ex_right < C(p,2), certifying r <= p
  std::int64_t ex_left = 0;
  std::int64_t ex_right = 0;
  std::int64_t total = 0;  // C(p,2)
};

/// Requires p >= max(m, n); throws FormulaDomainError for tstar.
TuranSum ramsey_upper_via_turan(const TreeSpec& left, const TreeSpec& right, std::int64_t p);

/// Best maximum-degree lower bound for r(left, right) over the modes whose
/// hypotheses hold, or nothing when a tree has maximum degree below 2.
struct DegreeBound {
  std::int64_t value = 0;
  DegreeBoundMode mode = DegreeBoundMode::Parity;
};
std::optional<DegreeBound> best_degree_bound(const TreeSpec& left, const TreeSpec& right);

}  // namespace trt
