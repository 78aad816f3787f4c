#include <doctest.h>

#include "trt/errors.hpp"
#include "trt/turan.hpp"

using namespace trt;

namespace {
TreeSpec t1(int n) { return {TreeFamily::T1, n}; }
TreeSpec t2(int n) { return {TreeFamily::T2, n}; }
}  // namespace

TEST_SUITE("turan") {
  TEST_CASE("fixed values") {
    auto path = ex_value({TreeFamily::Path, 5}, 7);
    CHECK(path.value == 9);
    CHECK(path.k == 1);
    CHECK(path.r == 3);
    CHECK(ex_value({TreeFamily::Star, 5}, 5).value == 7);

    auto a = ex_value(t1(10), 13);
    CHECK(a.value == 42);
    CHECK(a.branch == ExBranch::CliqueUnion);
    CHECK(a.branch_values == std::vector<std::int64_t>{39, 42});
    CHECK(a.witness.to_string() == "K_9 + K_4");

    auto b = ex_value(t1(20), 24);
    CHECK(b.value == 192);
    CHECK(b.branch == ExBranch::Deficit);
    CHECK_FALSE(b.tie);

    auto c = ex_value(t1(16), 18);
    CHECK(c.value == 108);
    CHECK(c.branch_values == std::vector<std::int64_t>{108, 108});
    CHECK(c.branch == ExBranch::Deficit);
    CHECK(c.tie);

    CHECK(ex_value(t2(6), 12).value == 21);
    CHECK(ex_value(t1(10), 9).value == 36);
    auto d = ex_value(t2(8), 4);
    CHECK(d.value == 6);
    CHECK(d.branch == ExBranch::TrivialComplete);
  }

  TEST_CASE("domain errors") {
    CHECK_THROWS_AS(ex_value({TreeFamily::TStar, 8}, 20), FormulaDomainError);
    CHECK_THROWS_AS(ex_value(t1(8), -1), InvalidArgument);
    CHECK_THROWS_AS(ex_bounds(t1(10), 18), FormulaDomainError);
  }

  TEST_CASE("bounds bracket the value") {
    for (int n = 5; n <= 40; ++n) {
      for (int p = n; p <= 400; ++p) {
        if (p % (n - 1) == 0) continue;
        const auto b = ex_bounds(t1(n), p);
        const auto v = ex_value(t1(n), p).value;
        CHECK(b.lo <= v);
        CHECK(v <= b.hi);
        CHECK(b.lo_denominator > 0);
        CHECK(b.lo_numerator <= b.lo * b.lo_denominator);
      }
    }
    const auto b = ex_bounds(t2(10), 13);
    CHECK(b.lo <= 42);
    CHECK(42 <= b.hi);
  }

  TEST_CASE("case explanation") {
    const auto tie = ex_case_explain(t1(16), 18);
    CHECK(tie.sign == 0);
    CHECK(tie.tie);
    const auto neg = ex_case_explain(t1(13), 15);
    CHECK(neg.r == 3);
    CHECK(neg.sign < 0);
    CHECK(neg.branch == ExBranch::CliqueUnion);
    const auto pos = ex_case_explain(t2(20), 24);
    CHECK(pos.discriminant == 22);
    CHECK(pos.sign > 0);
    CHECK(pos.branch == ExBranch::Deficit);
    CHECK_FALSE(pos.trace.empty());
  }

  TEST_CASE("max form equals the case split") {
    for (std::int64_t n = 5; n <= 60; ++n)
      for (std::int64_t p = n - 1; p <= 1000; ++p) REQUIRE(ex_t1t2_max_form(n, p) == ex_t1t2_piecewise(n, p));
  }

  TEST_CASE("structural properties") {
    constexpr TreeFamily fams[] = {TreeFamily::Path, TreeFamily::Star, TreeFamily::TPrime, TreeFamily::T1,
                                   TreeFamily::T2};
    for (auto f : fams) {
      for (int n = 5; n <= 30; ++n) {
        std::int64_t prev = -1;
        for (int p = 0; p <= 200; ++p) {
          const auto r = ex_value({f, n}, p);
          CHECK(r.value >= prev);
          CHECK(r.value <= p * (p - 1) / 2);
          if (p >= n - 1) {
            CHECK(r.k * (n - 1) + r.r == p);
            CHECK(r.r >= 0);
            CHECK(r.r <= n - 2);
          }
          if (r.branch_values.size() == 2) CHECK(r.value == std::max(r.branch_values[0], r.branch_values[1]));
          CHECK(r.witness.order() == p);
          prev = r.value;
        }
      }
    }
  }

  TEST_CASE("T1 and T2 agree and dominate the smaller star") {
    for (int n = 5; n <= 40; ++n) {
      for (int p = n - 1; p <= 300; ++p) {
        CHECK(ex_value(t1(n), p).value == ex_value(t2(n), p).value);
        if (p >= n) CHECK((static_cast<std::int64_t>(n) - 4) * p / 2 <= ex_value(t1(n), p).value);
      }
    }
  }
}
