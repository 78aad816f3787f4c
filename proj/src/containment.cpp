#include "trt/containment.hpp"

#include <algorithm>
#include <numeric>

#include "trt/errors.hpp"

namespace trt {

namespace {

std::size_t idx(int v) { return static_cast<std::size_t>(v); }

std::vector<int> component_labels(const Graph& g, std::vector<int>& sizes) {
  const int n = g.order();
  std::vector<int> comp(idx(n), -1);
  sizes.clear();
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    if (comp[idx(s)] >= 0) continue;
    const int id = static_cast<int>(sizes.size());
    sizes.push_back(0);
    comp[idx(s)] = id;
    stack.push_back(s);
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      ++sizes.back();
      for (int u = 0; u < n; ++u) {
        if (g.has_edge(v, u) && comp[idx(u)] < 0) {
          comp[idx(u)] = id;
          stack.push_back(u);
        }
      }
    }
  }
  return comp;
}

class EmbeddingSearch {
 public:
  EmbeddingSearch(const Graph& host, const Graph& tree) : host_(host), tree_(tree) {
    comp_ = component_labels(host_, comp_size_);
    root_tree();
  }

  std::optional<Embedding> run() {
    image_.assign(idx(tree_.order()), -1);
    used_.reset();
    if (!place(0)) return std::nullopt;
    return Embedding{image_};
  }

 private:
  void root_tree() {
    const int n = tree_.order();
    int root = 0;
    for (int v = 1; v < n; ++v)
      if (tree_.degree(v) > tree_.degree(root)) root = v;

    parent_.assign(idx(n), -1);
    std::vector<int> bfs{root};
    std::vector<bool> seen(idx(n), false);
    seen[idx(root)] = true;
    for (std::size_t i = 0; i < bfs.size(); ++i) {
      const int v = bfs[i];
      for (int u = 0; u < n; ++u) {
        if (tree_.has_edge(v, u) && !seen[idx(u)]) {
          seen[idx(u)] = true;
          parent_[idx(u)] = v;
          bfs.push_back(u);
        }
      }
    }
    std::vector<int> subtree(idx(n), 1);
    for (auto it = bfs.rbegin(); it != bfs.rend(); ++it)
      if (parent_[idx(*it)] >= 0) subtree[idx(parent_[idx(*it)])] += subtree[idx(*it)];

    auto is_leaf = [&](int v) { return v != root && tree_.degree(v) == 1; };
    std::vector<std::vector<int>> core_children(idx(n));
    for (int v = 0; v < n; ++v) {
      if (v == root) continue;
      if (is_leaf(v))
        leaves_.push_back(v);
      else
        core_children[idx(parent_[idx(v)])].push_back(v);
    }
    for (auto& kids : core_children) {
      std::sort(kids.begin(), kids.end(), [&](int a, int b) {
        if (subtree[idx(a)] != subtree[idx(b)]) return subtree[idx(a)] > subtree[idx(b)];
        return a < b;
      });
    }
    std::vector<int> stack{root};
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      core_.push_back(v);
      const auto& kids = core_children[idx(v)];
      for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back(*it);
    }
    // Children each core vertex still needs room for once it is placed.
    pending_.assign(idx(n), 0);
    for (int v = 0; v < n; ++v)
      if (v != root) ++pending_[idx(parent_[idx(v)])];
  }

  bool place(std::size_t i) {
    if (i == core_.size()) return assign_leaves();
    const int t = core_[i];
    const int need_deg = tree_.degree(t);
    const int p = parent_[idx(t)];
    for (int h = 0; h < host_.order(); ++h) {
      if (used_.test(idx(h))) continue;
      if (p >= 0 && !host_.has_edge(image_[idx(p)], h)) continue;
      if (host_.degree(h) < need_deg) continue;
      if (comp_size_[idx(comp_[idx(h)])] < tree_.order()) continue;
      const VertexSet free_nbrs = host_.neighbors(h) & ~used_;
      if (static_cast<int>(free_nbrs.count()) < pending_[idx(t)]) continue;
      image_[idx(t)] = h;
      used_.set(idx(h));
      if (place(i + 1)) return true;
      used_.reset(idx(h));
      image_[idx(t)] = -1;
    }
    return false;
  }

  // Kuhn's augmenting-path matching of leaves to free host neighbours of
  // their parents' images.
  bool assign_leaves() {
    match_.assign(idx(host_.order()), -1);
    for (std::size_t l = 0; l < leaves_.size(); ++l) {
      visited_.reset();
      if (!augment(static_cast<int>(l))) return false;
    }
    for (int h = 0; h < host_.order(); ++h)
      if (match_[idx(h)] >= 0) image_[idx(leaves_[idx(match_[idx(h)])])] = h;
    return true;
  }

  bool augment(int l) {
    const int anchor = image_[idx(parent_[idx(leaves_[idx(l)])])];
    const VertexSet options = host_.neighbors(anchor) & ~used_;
    for (int h = 0; h < host_.order(); ++h) {
      if (!options.test(idx(h)) || visited_.test(idx(h))) continue;
      visited_.set(idx(h));
      if (match_[idx(h)] < 0 || augment(match_[idx(h)])) {
        match_[idx(h)] = l;
        return true;
      }
    }
    return false;
  }

  const Graph& host_;
  const Graph& tree_;
  std::vector<int> comp_;
  std::vector<int> comp_size_;
  std::vector<int> parent_;
  std::vector<int> core_;
  std::vector<int> leaves_;
  std::vector<int> pending_;
  std::vector<int> image_;
  std::vector<int> match_;
  VertexSet used_;
  VertexSet visited_;
};

}  // namespace

int max_degree(const Graph& g) {
  int best = 0;
  for (int v = 0; v < g.order(); ++v) best = std::max(best, g.degree(v));
  return best;
}

bool is_connected(const Graph& g) {
  if (g.order() <= 1) return true;
  std::vector<int> sizes;
  component_labels(g, sizes);
  return sizes.size() == 1;
}

bool is_tree(const Graph& g) {
  return g.order() >= 1 && g.edge_count() == g.order() - 1 && is_connected(g);
}

bool is_valid_embedding(const Graph& host, const Graph& tree, const Embedding& e) {
  if (static_cast<int>(e.map.size()) != tree.order()) return false;
  VertexSet seen;
  for (int h : e.map) {
    if (h < 0 || h >= host.order() || seen.test(idx(h))) return false;
    seen.set(idx(h));
  }
  for (auto [u, v] : tree.edges())
    if (!host.has_edge(e.map[idx(u)], e.map[idx(v)])) return false;
  return true;
}

std::optional<Embedding> find_embedding(const Graph& host, const Graph& tree) {
  if (!is_tree(tree)) throw NotATree("pattern is not a tree (must be connected with order-1 edges)");
  if (tree.order() > host.order()) return std::nullopt;
  EmbeddingSearch search(host, tree);
  auto found = search.run();
  if (found && !is_valid_embedding(host, tree, *found))
    throw InternalConsistencyError("containment search returned an invalid embedding");
  return found;
}

bool contains_subgraph(const Graph& host, const Graph& tree) { return find_embedding(host, tree).has_value(); }

}  // namespace trt
