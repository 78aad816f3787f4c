#pragma once

#include <optional>
#include <vector>

#include "trt/graph.hpp"

namespace trt {

/// Injective map from tree vertices to host vertices: map[t] is the image
/// of tree vertex t.
struct Embedding {
  std::vector<int> map;
  friend bool operator==(const Embedding&, const Embedding&) = default;
};

int max_degree(const Graph& g);
bool is_connected(const Graph& g);
/// Connected with exactly order-1 edges. The empty graph is not a tree.
bool is_tree(const Graph& g);

/// Injectivity plus edge preservation.
bool is_valid_embedding(const Graph& host, const Graph& tree, const Embedding& e);

/// Finds a (not necessarily induced) copy of `tree` in `host`.
///
/// The tree is rooted at its maximum-degree vertex. Non-leaf vertices are
/// placed by backtracking in decreasing-subtree-size order; candidates are
/// host neighbours of the parent's image with enough degree, inside a host
/// component large enough for the whole tree. Leaves are assigned last by a
/// bipartite matching, so interchangeable leaves never cause branching.
/// Host vertices are tried in ascending label order, making the returned
/// embedding deterministic.
///
/// Throws NotATree if `tree` is not a tree.
std::optional<Embedding> find_embedding(const Graph& host, const Graph& tree);

bool contains_subgraph(const Graph& host, const Graph& tree);

}  // namespace trt
