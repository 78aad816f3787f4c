#pragma once

#include <string>
#include <variant>
#include <vector>

#include "trt/graph.hpp"

namespace trt {

struct CliqueComponent {
  int order = 0;
  friend bool operator==(const CliqueComponent&, const CliqueComponent&) = default;
};

/// A component realized from its degree sequence by Havel-Hakimi.
struct DegreeSequenceComponent {
  std::vector<int> degrees;
  friend bool operator==(const DegreeSequenceComponent&, const DegreeSequenceComponent&) = default;
};

/// Degrees (d, ..., d) on p vertices, or (d, ..., d, d-1) when d*p is odd.
/// Requires 0 <= d < p.
std::vector<int> near_regular_degrees(int p, int d);

using WitnessComponent = std::variant<CliqueComponent, DegreeSequenceComponent>;

/// Symbolic recipe for a graph: the disjoint union of its components, in
/// order. Realization is deterministic, so the same descriptor always yields
/// the same labeled graph (and the same graph6 bytes).
struct WitnessDescriptor {
  std::vector<WitnessComponent> components;

  int order() const;
  Graph realize() const;
  /// Compact human form, e.g. "2K_9 + K_4" or "K_19 + DS(24; 16^24)".
  std::string to_string() const;

  /// Appends `count` copies of K_k (skipped when count or k is zero).
  WitnessDescriptor& add_cliques(int count, int k);
  WitnessDescriptor& add_degree_sequence(std::vector<int> degrees);

  friend bool operator==(const WitnessDescriptor&, const WitnessDescriptor&) = default;
};

}  // namespace trt
