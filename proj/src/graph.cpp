#include "trt/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "trt/errors.hpp"

namespace trt {

namespace {

void check_order(std::int64_t order) {
  if (order < 0) throw InvalidArgument("negative graph order");
  if (order > kMaxOrder) {
    throw OrderCapExceeded("graph order " + std::to_string(order) + " exceeds cap " +
                           std::to_string(kMaxOrder));
  }
}

std::size_t idx(int v) { return static_cast<std::size_t>(v); }

}  // namespace

std::int64_t choose2(std::int64_t k) { return k < 2 ? 0 : k * (k - 1) / 2; }

std::vector<int> Graph::degree_sequence() const {
  std::vector<int> seq(idx(order_));
  for (int v = 0; v < order_; ++v) seq[idx(v)] = degree(v);
  std::sort(seq.begin(), seq.end(), std::greater<>());
  return seq;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(edges_));
  for (int u = 0; u < order_; ++u)
    for (int v = u + 1; v < order_; ++v)
      if (has_edge(u, v)) out.emplace_back(u, v);
  return out;
}

Graph Graph::from_edges(int order, std::span<const Edge> edges) {
  GraphBuilder b(order);
  for (auto [u, v] : edges) b.add_edge(u, v);
  return b.build();
}

GraphBuilder::GraphBuilder(int order) : order_(order) {
  check_order(order);
  adj_.resize(idx(order));
}

void GraphBuilder::check_vertex(int v) const {
  if (v < 0 || v >= order_) throw InvalidArgument("vertex " + std::to_string(v) + " out of range");
}

GraphBuilder& GraphBuilder::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw InvalidArgument("self-loop at vertex " + std::to_string(u));
  adj_[idx(u)].set(idx(v));
  adj_[idx(v)].set(idx(u));
  return *this;
}

GraphBuilder& GraphBuilder::remove_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  adj_[idx(u)].reset(idx(v));
  adj_[idx(v)].reset(idx(u));
  return *this;
}

bool GraphBuilder::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return adj_[idx(u)].test(idx(v));
}

int GraphBuilder::degree(int v) const {
  check_vertex(v);
  return static_cast<int>(adj_[idx(v)].count());
}

Graph GraphBuilder::build() const {
  Graph g;
  g.order_ = order_;
  g.adj_ = adj_;
  std::int64_t degree_sum = 0;
  for (int v = 0; v < order_; ++v) degree_sum += static_cast<std::int64_t>(adj_[idx(v)].count());
  g.edges_ = degree_sum / 2;
  if (!satisfies_invariants(g)) throw InternalConsistencyError("graph builder produced an asymmetric graph");
  return g;
}

bool satisfies_invariants(const Graph& g) {
  const int n = g.order();
  std::int64_t degree_sum = 0;
  VertexSet valid;
  for (int v = 0; v < n; ++v) valid.set(idx(v));
  for (int v = 0; v < n; ++v) {
    const VertexSet& row = g.neighbors(v);
    if (row.test(idx(v))) return false;
    if ((row & ~valid).any()) return false;
    for (int u = 0; u < n; ++u)
      if (row.test(idx(u)) != g.neighbors(u).test(idx(v))) return false;
    degree_sum += static_cast<std::int64_t>(row.count());
  }
  return degree_sum % 2 == 0 && degree_sum / 2 == g.edge_count();
}

Graph empty_graph(int order) { return GraphBuilder(order).build(); }

Graph complete(int k) {
  GraphBuilder b(k);
  for (int u = 0; u < k; ++u)
    for (int v = u + 1; v < k; ++v) b.add_edge(u, v);
  return b.build();
}

Graph complete_bipartite(int a, int b) {
  if (a < 0 || b < 0) throw InvalidArgument("negative side in complete_bipartite");
  check_order(static_cast<std::int64_t>(a) + b);
  GraphBuilder gb(a + b);
  for (int u = 0; u < a; ++u)
    for (int v = a; v < a + b; ++v) gb.add_edge(u, v);
  return gb.build();
}

Graph path_graph(int k) {
  GraphBuilder b(k);
  for (int v = 0; v + 1 < k; ++v) b.add_edge(v, v + 1);
  return b.build();
}

Graph cycle_graph(int k) {
  if (k < 3) throw InvalidArgument("cycle needs at least 3 vertices");
  GraphBuilder b(k);
  for (int v = 0; v < k; ++v) b.add_edge(v, (v + 1) % k);
  return b.build();
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  check_order(static_cast<std::int64_t>(g.order()) + h.order());
  GraphBuilder b(g.order() + h.order());
  for (auto [u, v] : g.edges()) b.add_edge(u, v);
  const int shift = g.order();
  for (auto [u, v] : h.edges()) b.add_edge(u + shift, v + shift);
  return b.build();
}

Graph complement(const Graph& g) {
  GraphBuilder b(g.order());
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (!g.has_edge(u, v)) b.add_edge(u, v);
  return b.build();
}

Graph induced_prefix(const Graph& g, int k) {
  if (k < 0 || k > g.order()) throw InvalidArgument("induced prefix size out of range");
  GraphBuilder b(k);
  for (int u = 0; u < k; ++u)
    for (int v = u + 1; v < k; ++v)
      if (g.has_edge(u, v)) b.add_edge(u, v);
  return b.build();
}

Graph add_edge(const Graph& g, int u, int v) {
  GraphBuilder b(g.order());
  for (auto [x, y] : g.edges()) b.add_edge(x, y);
  b.add_edge(u, v);
  return b.build();
}

Graph realize_degree_sequence(std::span<const int> degrees) {
  const int n = static_cast<int>(degrees.size());
  check_order(n);
  std::vector<int> residual(degrees.begin(), degrees.end());
  for (int d : residual)
    if (d < 0 || d >= std::max(n, 1)) throw InvalidArgument("degree out of range for sequence");
  if (std::accumulate(residual.begin(), residual.end(), std::int64_t{0}) % 2 != 0)
    throw InvalidArgument("degree sum is odd");

  GraphBuilder b(n);
  if (n == 0) return b.build();
  std::vector<int> order(idx(n));
  std::iota(order.begin(), order.end(), 0);
  auto by_residual = [&](int x, int y) {
    if (residual[idx(x)] != residual[idx(y)]) return residual[idx(x)] > residual[idx(y)];
    return x < y;
  };
  for (;;) {
    std::sort(order.begin(), order.end(), by_residual);
    const int head = order.front();
    const int need = residual[idx(head)];
    if (need == 0) break;
    if (need > n - 1) throw InvalidArgument("degree sequence is not graphical");
    for (int i = 1; i <= need; ++i) {
      const int v = order[idx(i)];
      if (residual[idx(v)] == 0) throw InvalidArgument("degree sequence is not graphical");
      b.add_edge(head, v);
      --residual[idx(v)];
    }
    residual[idx(head)] = 0;
  }
  return b.build();
}

}  // namespace trt
