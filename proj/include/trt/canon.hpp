#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "trt/graph.hpp"

namespace trt {

inline constexpr int kSmallMaxOrder = 32;

/// Dense graph on at most 32 vertices, one 32-bit row per vertex. Used by
/// the enumeration kernels where Graph's 128-bit rows are wasted work.
struct SmallGraph {
  int n = 0;
  std::array<std::uint32_t, kSmallMaxOrder> adj{};

  bool has_edge(int u, int v) const { return (adj[static_cast<std::size_t>(u)] >> v) & 1U; }
  int degree(int v) const;
  int edge_count() const;
  void add_edge(int u, int v);

  Graph to_graph() const;
  static SmallGraph from_graph(const Graph& g);
};

SmallGraph complement(const SmallGraph& g);

struct CanonicalForm {
  std::vector<int> lab;  // lab[i]: vertex placed at canonical position i
  std::vector<int> pos;  // inverse of lab
  std::vector<std::vector<int>> generators;  // generate the automorphism group
  std::vector<int> orbit;                    // orbit representative (smallest label) per vertex
  std::vector<std::uint32_t> code;           // canonical adjacency rows

  /// The relabeled graph; equal for two inputs iff they are isomorphic.
  SmallGraph graph() const;
};

/// Canonical labeling by individualization and equitable refinement.
///
/// The search individualizes vertices of the first smallest non-singleton
/// cell, keeps the leaf with the lexicographically largest adjacency code,
/// and turns every pair of leaves with equal codes into an automorphism.
/// Children of a node are skipped when an automorphism fixing the node's
/// individualized prefix maps them onto an explored sibling.
CanonicalForm canonical_form(const SmallGraph& g);

bool is_isomorphic(const SmallGraph& a, const SmallGraph& b);

}  // namespace trt
