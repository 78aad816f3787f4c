#include <doctest.h>

#include "trt/containment.hpp"
#include "trt/errors.hpp"
#include "trt/graph.hpp"

using namespace trt;

TEST_SUITE("graph") {
  TEST_CASE("basic constructors") {
    CHECK(complete(9).edge_count() == 36);
    CHECK(complete_bipartite(3, 4).edge_count() == 12);
    CHECK(path_graph(9).edge_count() == 8);
    CHECK(cycle_graph(7).edge_count() == 7);
    CHECK(empty_graph(5).edge_count() == 0);
    CHECK(complete(0).order() == 0);
  }

  TEST_CASE("complement of two disjoint K5 is K_{5,5}") {
    const Graph g = disjoint_union(complete(5), complete(5));
    CHECK(complement(g) == complete_bipartite(5, 5));
    CHECK(complement(complement(g)) == g);
  }

  TEST_CASE("disjoint union shifts labels") {
    const Graph g = disjoint_union(complete(2), path_graph(3));
    CHECK(g.order() == 5);
    CHECK(g.has_edge(0, 1));
    CHECK(g.has_edge(2, 3));
    CHECK(g.has_edge(3, 4));
    CHECK_FALSE(g.has_edge(1, 2));
  }

  TEST_CASE("builder rejects loops and bad labels") {
    GraphBuilder b(4);
    CHECK_THROWS_AS(b.add_edge(1, 1), InvalidArgument);
    CHECK_THROWS_AS(b.add_edge(0, 4), InvalidArgument);
    CHECK_THROWS_AS(b.add_edge(-1, 2), InvalidArgument);
  }

  TEST_CASE("order cap") {
    CHECK_NOTHROW(complete(128));
    CHECK_THROWS_AS(empty_graph(129), OrderCapExceeded);
    CHECK_THROWS_AS(disjoint_union(complete(100), complete(29)), OrderCapExceeded);
  }

  TEST_CASE("invariants hold on constructor outputs") {
    for (int k = 0; k <= 20; ++k) {
      CHECK(satisfies_invariants(complete(k)));
      CHECK(satisfies_invariants(path_graph(k)));
      CHECK(satisfies_invariants(complement(path_graph(k))));
    }
  }

  TEST_CASE("degree sequence realization") {
    const std::vector<int> seq{3, 3, 2, 2, 2};
    const Graph g = realize_degree_sequence(seq);
    CHECK(g.degree_sequence() == seq);
    const std::vector<int> bad{3, 3, 3};
    CHECK_THROWS_AS(realize_degree_sequence(bad), InvalidArgument);
    const std::vector<int> odd{1, 1, 1};
    CHECK_THROWS_AS(realize_degree_sequence(odd), InvalidArgument);
  }

  TEST_CASE("induced prefix and add_edge") {
    const Graph g = induced_prefix(complete(6), 4);
    CHECK(g == complete(4));
    const Graph h = add_edge(empty_graph(3), 0, 2);
    CHECK(h.edge_count() == 1);
    CHECK(h.has_edge(2, 0));
  }

  TEST_CASE("max degree and connectivity") {
    CHECK(max_degree(complete(9)) == 8);
    CHECK(max_degree(empty_graph(0)) == 0);
    CHECK_FALSE(is_connected(disjoint_union(complete(5), complete(5))));
    CHECK(is_connected(path_graph(9)));
    CHECK(is_connected(empty_graph(1)));
    for (int n = 2; n <= 10; ++n) {
      Graph g = complete(3);
      for (int k = 0; k < 2; ++k) g = disjoint_union(g, complete(n - 1));
      CHECK(max_degree(g) == std::max(n - 2, 2));
    }
  }

  // Binomial inequalities used in the extremal arguments, checked as
  // integer identities over a grid.
  TEST_CASE("binomial arithmetic") {
    for (std::int64_t a = 0; a <= 60; ++a) {
      for (std::int64_t b = 0; b <= 60; ++b) {
        CHECK(choose2(a) + choose2(b) <= choose2(a + b));
        CHECK(choose2(a + b) == choose2(a) + choose2(b) + a * b);
        if (a >= b && b >= 1) CHECK(choose2(a) + choose2(b) <= choose2(a + 1) + choose2(b - 1));
      }
    }
  }
}
