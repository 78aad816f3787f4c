#pragma once

#include <bitset>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace trt {

inline constexpr int kMaxOrder = 128;

using VertexSet = std::bitset<kMaxOrder>;
using Edge = std::pair<int, int>;

std::int64_t choose2(std::int64_t k);

class GraphBuilder;

/// Immutable simple undirected graph on vertices 0..order()-1.
///
/// Adjacency is stored as one 128-bit row per vertex. Every instance is
/// symmetric and irreflexive; the builder enforces this before handing out
/// a Graph.
class Graph {
 public:
  Graph() = default;

  int order() const noexcept { return order_; }
  std::int64_t edge_count() const noexcept { return edges_; }

  const VertexSet& neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  bool has_edge(int u, int v) const { return neighbors(u).test(static_cast<std::size_t>(v)); }
  int degree(int v) const { return static_cast<int>(neighbors(v).count()); }

  /// Degrees sorted in non-increasing order.
  std::vector<int> degree_sequence() const;
  /// Edges (u, v) with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;

  static Graph from_edges(int order, std::span<const Edge> edges);

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  friend class GraphBuilder;
  int order_ = 0;
  std::int64_t edges_ = 0;
  std::vector<VertexSet> adj_;
};

/// Mutable staging area for a Graph. Rejects loops and out-of-range labels.
class GraphBuilder {
 public:
  explicit GraphBuilder(int order);

  int order() const noexcept { return order_; }
  GraphBuilder& add_edge(int u, int v);
  GraphBuilder& remove_edge(int u, int v);
  bool has_edge(int u, int v) const;
  int degree(int v) const;

  /// Validates symmetry and irreflexivity, then freezes the adjacency.
  Graph build() const;

 private:
  void check_vertex(int v) const;
  int order_;
  std::vector<VertexSet> adj_;
};

Graph empty_graph(int order);
Graph complete(int k);
Graph complete_bipartite(int a, int b);
Graph path_graph(int k);
Graph cycle_graph(int k);

/// Vertices of `g` keep their labels; vertices of `h` are shifted by g.order().
Graph disjoint_union(const Graph& g, const Graph& h);
Graph complement(const Graph& g);
/// Subgraph induced by vertices 0..k-1.
Graph induced_prefix(const Graph& g, int k);
Graph add_edge(const Graph& g, int u, int v);

/// Havel-Hakimi realization: repeatedly take the vertex with the largest
/// residual degree (lowest label on ties) and join it to the next-largest
/// residual degrees (lowest labels on ties). Throws InvalidArgument when
/// the sequence is not graphical.
Graph realize_degree_sequence(std::span<const int> degrees);

/// Checks the structural invariants (symmetry, irreflexivity, edge count).
bool satisfies_invariants(const Graph& g);

}  // namespace trt
