#include <doctest.h>

#include <algorithm>

#include "trt/containment.hpp"
#include "trt/errors.hpp"
#include "trt/trees.hpp"

using namespace trt;

namespace {
constexpr TreeFamily kAll[] = {TreeFamily::Path, TreeFamily::Star, TreeFamily::TPrime,
                               TreeFamily::TStar, TreeFamily::T1, TreeFamily::T2};
}

TEST_SUITE("trees") {
  TEST_CASE("every family builds a tree of the right order") {
    for (auto f : kAll) {
      for (int n = min_order(f); n <= 40; ++n) {
        const Graph t = make_tree({f, n});
        CHECK(t.order() == n);
        CHECK(is_tree(t));
        CHECK(max_degree(t) == tree_max_degree({f, n}));
      }
    }
  }

  TEST_CASE("degree sequences") {
    CHECK(make_tree({TreeFamily::Star, 6}).degree_sequence() == std::vector<int>{5, 1, 1, 1, 1, 1});
    CHECK(make_tree({TreeFamily::TPrime, 6}).degree_sequence() == std::vector<int>{4, 2, 1, 1, 1, 1});
    CHECK(make_tree({TreeFamily::TStar, 7}).degree_sequence() == std::vector<int>{4, 2, 2, 1, 1, 1, 1});
    CHECK(make_tree({TreeFamily::T1, 8}).degree_sequence() == std::vector<int>{5, 2, 2, 1, 1, 1, 1, 1});
    CHECK(make_tree({TreeFamily::T2, 8}).degree_sequence() == std::vector<int>{5, 3, 1, 1, 1, 1, 1, 1});
  }

  TEST_CASE("labeling") {
    const Graph t1 = make_tree({TreeFamily::T1, 10});
    for (int i = 1; i <= 7; ++i) CHECK(t1.has_edge(0, i));
    CHECK(t1.has_edge(6, 8));
    CHECK(t1.has_edge(7, 9));
    const Graph t2 = make_tree({TreeFamily::T2, 10});
    CHECK(t2.has_edge(7, 8));
    CHECK(t2.has_edge(7, 9));
    const Graph ts = make_tree({TreeFamily::TStar, 10});
    CHECK(ts.has_edge(7, 8));
    CHECK(ts.has_edge(8, 9));
  }

  TEST_CASE("small coincidences") {
    CHECK(make_tree({TreeFamily::T1, 5}).degree_sequence() == make_tree({TreeFamily::Path, 5}).degree_sequence());
    CHECK(make_tree({TreeFamily::TPrime, 4}).degree_sequence() == make_tree({TreeFamily::Path, 4}).degree_sequence());
  }

  TEST_CASE("names and parsing") {
    for (auto f : kAll) CHECK(parse_family(family_name(f)) == f);
    CHECK_FALSE(parse_family("T1").has_value());
    CHECK(parse_tree_spec("t1:12") == TreeSpec{TreeFamily::T1, 12});
    CHECK(to_string(TreeSpec{TreeFamily::TStar, 9}) == "tstar:9");
    CHECK_THROWS_AS(parse_tree_spec("t1"), InvalidArgument);
    CHECK_THROWS_AS(parse_tree_spec("t3:8"), InvalidArgument);
    CHECK_THROWS_AS(parse_tree_spec("t1:4"), InvalidArgument);
    CHECK_THROWS_AS(parse_tree_spec("t1:1x"), InvalidArgument);
    CHECK_THROWS_AS(make_tree({TreeFamily::TStar, 3}), InvalidArgument);
  }
}
