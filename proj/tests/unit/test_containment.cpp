#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "trt/constructions.hpp"
#include "trt/containment.hpp"
#include "trt/errors.hpp"
#include "trt/trees.hpp"

using namespace trt;

namespace {

Graph random_graph(std::mt19937& rng, int n, double density) {
  std::bernoulli_distribution coin(density);
  GraphBuilder b(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) b.add_edge(u, v);
  return b.build();
}

// Tries every injective placement of the tree vertices.
bool brute_contains(const Graph& host, const Graph& tree) {
  const int n = tree.order();
  if (n > host.order()) return false;
  std::vector<int> image(static_cast<std::size_t>(n), -1);
  std::vector<bool> used(static_cast<std::size_t>(host.order()), false);
  std::function<bool(int)> place = [&](int t) {
    if (t == n) return true;
    for (int h = 0; h < host.order(); ++h) {
      if (used[static_cast<std::size_t>(h)]) continue;
      bool ok = true;
      for (int s = 0; s < t && ok; ++s)
        if (tree.has_edge(s, t) && !host.has_edge(image[static_cast<std::size_t>(s)], h)) ok = false;
      if (!ok) continue;
      used[static_cast<std::size_t>(h)] = true;
      image[static_cast<std::size_t>(t)] = h;
      if (place(t + 1)) return true;
      used[static_cast<std::size_t>(h)] = false;
    }
    return false;
  };
  return place(0);
}

constexpr TreeFamily kAll[] = {TreeFamily::Path, TreeFamily::Star, TreeFamily::TPrime,
                               TreeFamily::TStar, TreeFamily::T1, TreeFamily::T2};

}  // namespace

TEST_SUITE("containment") {
  TEST_CASE("fixed examples") {
    CHECK_FALSE(contains_subgraph(complete(5), make_tree({TreeFamily::T1, 6})));
    Graph g = disjoint_union(disjoint_union(complete(5), complete(5)), complete(2));
    CHECK_FALSE(contains_subgraph(g, make_tree({TreeFamily::T1, 6})));
    CHECK_FALSE(contains_subgraph(complete_bipartite(5, 5), make_tree({TreeFamily::TPrime, 8})));

    const Graph c7 = cycle_graph(7);
    const Graph p5 = path_graph(5);
    const auto e = find_embedding(c7, p5);
    REQUIRE(e.has_value());
    CHECK(is_valid_embedding(c7, p5, *e));
    // consecutive around the cycle
    for (int i = 0; i + 1 < 5; ++i) {
      const int d = (e->map[static_cast<std::size_t>(i)] - e->map[static_cast<std::size_t>(i + 1)] + 7) % 7;
      CHECK((d == 1 || d == 6));
    }
  }

  TEST_CASE("rejects non-trees") {
    CHECK_THROWS_AS(contains_subgraph(complete(5), cycle_graph(4)), NotATree);
    CHECK_THROWS_AS(contains_subgraph(complete(5), empty_graph(2)), NotATree);
    CHECK_THROWS_AS(contains_subgraph(complete(5), empty_graph(0)), NotATree);
  }

  TEST_CASE("agrees with brute force on random hosts") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 400; ++trial) {
      const int order = 5 + trial % 5;
      const Graph host = random_graph(rng, 8, 0.25 + 0.1 * (trial % 5));
      for (auto f : kAll) {
        if (order < min_order(f)) continue;
        const Graph tree = make_tree({f, order});
        const auto e = find_embedding(host, tree);
        CHECK(e.has_value() == brute_contains(host, tree));
        if (e) CHECK(is_valid_embedding(host, tree, *e));
      }
    }
  }

  TEST_CASE("star shortcut") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 200; ++trial) {
      const Graph host = random_graph(rng, 12, 0.3);
      for (int d = 1; d <= 11; ++d)
        CHECK(contains_subgraph(host, make_tree({TreeFamily::Star, d + 1})) == (max_degree(host) >= d));
    }
  }

  TEST_CASE("monotone under edge addition") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
      Graph host = random_graph(rng, 10, 0.2);
      const Graph tree = make_tree({kAll[trial % 6], 7});
      bool before = contains_subgraph(host, tree);
      for (int u = 0; u < 10; ++u) {
        const int v = (u * 3 + trial) % 10;
        if (u == v || host.has_edge(u, v)) continue;
        host = add_edge(host, u, v);
        const bool after = contains_subgraph(host, tree);
        CHECK((!before || after));
        before = after;
      }
    }
  }

  TEST_CASE("low maximum degree excludes T1 and T2") {
    for (int n = 6; n <= 14; ++n) {
      for (int p = n - 3; p <= 3 * n; ++p) {
        const Graph g = near_regular(p, n - 4);
        CHECK_FALSE(contains_subgraph(g, make_tree({TreeFamily::T1, n})));
        CHECK_FALSE(contains_subgraph(g, make_tree({TreeFamily::T2, n})));
      }
    }
  }

  TEST_CASE("deterministic") {
    std::mt19937 rng(9);
    const Graph host = random_graph(rng, 20, 0.4);
    const Graph tree = make_tree({TreeFamily::T2, 9});
    CHECK(find_embedding(host, tree) == find_embedding(host, tree));
  }
}
