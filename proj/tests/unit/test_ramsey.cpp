#include <doctest.h>

#include <algorithm>

#include "trt/errors.hpp"
#include "trt/ramsey.hpp"

using namespace trt;

namespace {

RamseyAnswer q(TreeFamily a, int m, TreeFamily b, int n) { return ramsey_value({a, m}, {b, n}); }

void check_exact(const RamseyAnswer& a, std::int64_t v, const std::string& rule) {
  CHECK(a.kind == RamseyKind::Exact);
  CHECK(a.value() == v);
  CHECK(a.lo == v);
  CHECK(a.hi == v);
  CHECK(a.rule == rule);
}

constexpr TreeFamily kAll[] = {TreeFamily::Path, TreeFamily::Star, TreeFamily::TPrime,
                               TreeFamily::TStar, TreeFamily::T1, TreeFamily::T2};

}  // namespace

TEST_SUITE("ramsey") {
  TEST_CASE("fixed values") {
    using F = TreeFamily;
    check_exact(q(F::Star, 5, F::Star, 5), 7, "Eq. 1.2");
    check_exact(q(F::Star, 4, F::Star, 4), 6, "Eq. 1.2");
    check_exact(q(F::T1, 17, F::T1, 17), 27, "Thm 4.1");
    check_exact(q(F::T1, 12, F::T2, 12), 18, "Thm 4.1");
    check_exact(q(F::T2, 8, F::TPrime, 8), 11, "Thm 4.2");
    check_exact(q(F::Path, 17, F::T2, 17), 27, "Thm 4.3");
    check_exact(q(F::Star, 6, F::T1, 9), 11, "Thm 6.1");
    check_exact(q(F::T1, 5, F::TPrime, 7), 9, "Thm 5.2");
    check_exact(q(F::TPrime, 9, F::T1, 10), 14, "Thm 6.3");
    check_exact(q(F::TPrime, 16, F::T1, 17), 27, "Thm 6.3");
    check_exact(q(F::T1, 12, F::T2, 13), 19, "Thm 6.5");

    const auto r = q(F::Star, 5, F::T1, 9);
    CHECK(r.kind == RamseyKind::Range);
    CHECK(r.lo == 9);
    CHECK(r.hi == 10);
    CHECK(r.rule == "Thm 6.1");
    CHECK(r.annotation.find("conjectured") != std::string::npos);
  }

  TEST_CASE("turan sums") {
    using F = TreeFamily;
    CHECK(ramsey_upper_via_turan({F::T1, 17}, {F::T1, 17}, 27).holds);
    CHECK(ramsey_upper_via_turan({F::T1, 12}, {F::T2, 12}, 18).holds);
    CHECK_FALSE(ramsey_upper_via_turan({F::T1, 12}, {F::T2, 12}, 17).holds);
    CHECK_THROWS_AS(ramsey_upper_via_turan({F::TStar, 12}, {F::T2, 12}, 20), FormulaDomainError);
  }

  TEST_CASE("degree bound") {
    const auto b = best_degree_bound({TreeFamily::T1, 17}, {TreeFamily::T1, 17});
    REQUIRE(b.has_value());
    CHECK(b->value == 27);
    CHECK_FALSE(best_degree_bound({TreeFamily::Path, 2}, {TreeFamily::T1, 9}).has_value());
  }

  TEST_CASE("fired rule appears in the trace") {
    for (auto fl : kAll) {
      for (auto fr : kAll) {
        for (int m = min_order(fl); m <= 22; ++m) {
          for (int n = min_order(fr); n <= 22; ++n) {
            const auto a = ramsey_value({fl, m}, {fr, n});
            if (a.kind == RamseyKind::Range) CHECK(*a.lo <= *a.hi);
            if (a.kind == RamseyKind::Unknown) CHECK_FALSE(a.hi.has_value());
            if (a.kind == RamseyKind::Unknown) continue;
            const bool named = std::any_of(a.trace.begin(), a.trace.end(),
                                           [&](const RuleCheck& c) { return c.rule == a.rule && c.holds; });
            CHECK(named);
          }
        }
      }
    }
  }

  TEST_CASE("no rule conflicts and witnesses verify") {
    for (auto fl : kAll) {
      for (auto fr : kAll) {
        for (int m = min_order(fl); m <= 30; ++m) {
          for (int n = min_order(fr); n <= 30; ++n) {
            RamseyAnswer a;
            REQUIRE_NOTHROW(a = ramsey_value({fl, m}, {fr, n}));
            if (a.witness && m + n <= 26) CHECK_NOTHROW(verify_ramsey_witness({fl, m}, {fr, n}, *a.witness));
          }
        }
      }
    }
  }

  TEST_CASE("ordered pairs") {
    const auto ab = q(TreeFamily::Star, 6, TreeFamily::T1, 9);
    const auto ba = q(TreeFamily::T1, 9, TreeFamily::Star, 6);
    CHECK(ab.rule != ba.rule);
    CHECK(ab.left == TreeSpec{TreeFamily::Star, 6});
    CHECK(ba.left == TreeSpec{TreeFamily::T1, 9});
  }

  TEST_CASE("deterministic") {
    const auto a = q(TreeFamily::T2, 11, TreeFamily::TStar, 15);
    const auto b = q(TreeFamily::T2, 11, TreeFamily::TStar, 15);
    CHECK(a.rule == b.rule);
    CHECK(a.lo == b.lo);
    CHECK(a.trace.size() == b.trace.size());
  }

  TEST_CASE("rule order") {
    const auto& order = ramsey_rule_order();
    CHECK(order.front() == "Eq. 1.2");
    CHECK(order.back() == "Lemma 4.2");
  }
}
