#include <doctest.h>

#include <numeric>

#include "trt/constructions.hpp"
#include "trt/containment.hpp"
#include "trt/errors.hpp"
#include "trt/turan.hpp"

using namespace trt;

TEST_SUITE("constructions") {
  TEST_CASE("near regular examples") {
    const Graph a = near_regular(9, 4);
    CHECK(a.edge_count() == 18);
    CHECK(a.degree_sequence() == std::vector<int>(9, 4));
    CHECK(max_degree(a) == 4);
    const Graph b = near_regular(7, 3);
    CHECK(b.edge_count() == 10);
    CHECK(b.degree_sequence() == std::vector<int>{3, 3, 3, 3, 3, 3, 2});
    CHECK(near_regular(5, 0) == empty_graph(5));
    CHECK_THROWS(near_regular(5, 5));
  }

  TEST_CASE("near regular grid") {
    for (int p = 2; p <= 60; ++p) {
      for (int d = 1; d < p; ++d) {
        const Graph g = near_regular(p, d);
        CHECK(g.edge_count() == static_cast<std::int64_t>(d) * p / 2);
        CHECK(max_degree(g) == d);
      }
    }
  }

  TEST_CASE("frobenius examples") {
    CHECK(frobenius_rep(3, 5, 8) == FrobeniusRep{1, 1});
    CHECK(frobenius_rep(1, 7, 5) == FrobeniusRep{5, 0});
    CHECK_FALSE(frobenius_rep(2, 3, 1).has_value());
    CHECK(frobenius_rep(6, 5, 20) == FrobeniusRep{0, 4});
    CHECK_FALSE(frobenius_rep(4, 6, 7).has_value());
  }

  TEST_CASE("frobenius coverage") {
    for (std::int64_t a = 1; a <= 20; ++a) {
      for (std::int64_t b = 1; b <= 20; ++b) {
        if (std::gcd(a, b) != 1) continue;
        const std::int64_t start = (a - 1) * (b - 1);
        for (std::int64_t t = start; t <= start + 200; ++t) {
          const auto rep = frobenius_rep(a, b, t);
          REQUIRE(rep.has_value());
          CHECK(rep->x >= 0);
          CHECK(rep->y >= 0);
          CHECK(a * rep->x + b * rep->y == t);
        }
      }
    }
  }

  TEST_CASE("extremal witness examples") {
    const auto a = extremal_witness({TreeFamily::T1, 10}, 13);
    CHECK(a.descriptor.to_string() == "K_9 + K_4");
    CHECK(a.graph.edge_count() == 42);
    const auto b = extremal_witness({TreeFamily::T1, 20}, 24);
    CHECK(b.graph.edge_count() == 192);
    CHECK(b.graph.order() == 24);
    CHECK(max_degree(b.graph) == 16);
    const auto c = extremal_witness({TreeFamily::Path, 5}, 7);
    CHECK(c.descriptor.to_string() == "K_4 + K_3");
    CHECK(c.graph.edge_count() == 9);
  }

  TEST_CASE("extremal witnesses verify") {
    constexpr TreeFamily fams[] = {TreeFamily::Path, TreeFamily::Star, TreeFamily::TPrime, TreeFamily::T1,
                                   TreeFamily::T2};
    for (auto f : fams)
      for (int n = 5; n <= 14; ++n)
        for (int p = n - 1; p <= std::min(4 * n, 45); ++p) CHECK_NOTHROW(extremal_witness({f, n}, p));
  }

  TEST_CASE("degree lower bound") {
    CHECK(degree_lower_bound(14, 14, DegreeBoundMode::Parity) == 27);
    CHECK(degree_lower_bound(9, 9, DegreeBoundMode::Parity) == 18);
    CHECK(degree_lower_bound(2, 5, DegreeBoundMode::StarVsBigger) == 9);
    CHECK(degree_lower_bound(3, 6, DegreeBoundMode::Disconnected) == 9);
    CHECK_THROWS_AS(degree_lower_bound(1, 5, DegreeBoundMode::Parity), InvalidArgument);
  }

  TEST_CASE("proof witnesses") {
    const TreeSpec t2_8{TreeFamily::T2, 8};
    const TreeSpec tp8{TreeFamily::TPrime, 8};
    WitnessDescriptor two_k5;
    two_k5.add_cliques(2, 5);
    const auto c = verify_ramsey_witness(t2_8, tp8, two_k5);
    CHECK(trt::complement(c.graph) == complete_bipartite(5, 5));

    WitnessDescriptor two_k4;
    two_k4.add_cliques(2, 4);
    CHECK_NOTHROW(verify_ramsey_witness({TreeFamily::T1, 5}, {TreeFamily::T1, 8}, two_k4));

    const auto pair = clique_pair_witness(7, 20);
    REQUIRE(pair.has_value());
    CHECK(pair->to_string() == "4K_5");
    CHECK_NOTHROW(verify_ramsey_witness({TreeFamily::T1, 7}, {TreeFamily::Star, 17}, *pair));

    WitnessDescriptor too_big;
    too_big.add_cliques(1, 8);
    CHECK_THROWS_AS(verify_ramsey_witness(t2_8, tp8, too_big), WitnessVerificationFailed);
  }

  TEST_CASE("ramsey witness orders") {
    const auto w = ramsey_witness({TreeFamily::T2, 8}, {TreeFamily::TPrime, 8});
    CHECK(w.graph.order() == 10);
    CHECK(ramsey_witness({TreeFamily::T1, 12}, {TreeFamily::T2, 12}).graph.order() == 17);
    CHECK(ramsey_witness({TreeFamily::T1, 17}, {TreeFamily::T1, 17}).graph.order() == 26);
  }
}
