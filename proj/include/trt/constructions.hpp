#pragma once

#include <cstdint>
#include <optional>

#include "trt/graph.hpp"
#include "trt/trees.hpp"
#include "trt/witness.hpp"

namespace trt {

/// t = a*x + b*y with x, y >= 0.
struct FrobeniusRep {
  std::int64_t x = 0;
  std::int64_t y = 0;
  friend bool operator==(const FrobeniusRep&, const FrobeniusRep&) = default;
};

/// Smallest-x representation of t as a*x + b*y, if any. Requires a, b >= 1.
std::optional<FrobeniusRep> frobenius_rep(std::int64_t a, std::int64_t b, std::int64_t t);

/// Havel-Hakimi realization of near_regular_degrees(p, d).
Graph near_regular(int p, int d);

struct Construction {
  Graph graph;
  WitnessDescriptor descriptor;
};

/// An extremal graph for ex(p; tree): realized from the ex_value witness,
/// then checked to have exactly ex_value edges and no copy of the tree.
/// Throws WitnessVerificationFailed if either check fails.
Construction extremal_witness(const TreeSpec& tree, std::int64_t p);

/// Which part of the maximum-degree lower bound for r(G1, G2) is meant.
///   Parity:        d1 + d2 - [(d1-1)(d2-1) odd]
///   StarVsBigger:  2*d2 - 1, for G1 connected of order m and d1 < d2 <= m
///   Disconnected:  d1 + d2,  for G1 connected of order m, d1 != m-1, d2 > m
enum class DegreeBoundMode { Parity, StarVsBigger, Disconnected };

std::int64_t degree_lower_bound(std::int64_t d1, std::int64_t d2, DegreeBoundMode mode);

/// A graph on degree_lower_bound(...) - 1 vertices with maximum degree below
/// d1 (or whose components are too small to hold a connected graph of order
/// m) and whose complement has maximum degree below d2. Requires the mode's
/// hypotheses on (d1, d2, m).
WitnessDescriptor degree_bound_witness(std::int64_t d1, std::int64_t d2, std::int64_t m, DegreeBoundMode mode);

/// count = (m-1)x + (m-2)y realized as xK_{m-1} + yK_{m-2}, smallest x.
std::optional<WitnessDescriptor> clique_pair_witness(std::int64_t m, std::int64_t count);

/// Realizes `descriptor` and checks that the graph has no copy of `left`
/// and its complement has no copy of `right`. Throws
/// WitnessVerificationFailed otherwise.
Construction verify_ramsey_witness(const TreeSpec& left, const TreeSpec& right, const WitnessDescriptor& descriptor);

/// The lower-bound witness attached to ramsey_value(left, right), verified.
/// Throws InvalidArgument when the answer carries no witness.
Construction ramsey_witness(const TreeSpec& left, const TreeSpec& right);

}  // namespace trt
