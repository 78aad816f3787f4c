#include "trt/acceptance.hpp"

#include <chrono>
#include <cstdio>
#include <numeric>
#include <sstream>

#include "trt/constructions.hpp"
#include "trt/containment.hpp"
#include "trt/errors.hpp"
#include "trt/ramsey.hpp"
#include "trt/turan.hpp"

namespace trt {

namespace {

using F = TreeFamily;

// Collects mismatches; the criterion passes when none were recorded.
struct Tally {
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::string first_failure;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (ok) return;
    if (failures++ == 0) first_failure = what;
  }

  std::pair<bool, std::string> result() const {
    std::string detail = std::to_string(checks) + " checks";
    if (failures > 0) detail += ", " + std::to_string(failures) + " failed; first: " + first_failure;
    return {failures == 0, detail};
  }
};

std::string q(const TreeSpec& t, std::int64_t p) { return to_string(t) + " p=" + std::to_string(p); }
std::string q(const TreeSpec& a, const TreeSpec& b) { return to_string(a) + " vs " + to_string(b); }

std::pair<bool, std::string> oracle_turan(const OracleBudget& budget) {
  Tally t;
  for (F f : {F::T1, F::T2, F::Path, F::Star, F::TPrime}) {
    for (int n = 5; n <= 7; ++n) {
      const TreeSpec tree{f, n};
      for (int p = n - 1; p <= 9; ++p) {
        const std::int64_t formula = ex_value(tree, p).value;
        const std::int64_t oracle = ex_oracle(p, tree, false, budget).value;
        t.expect(formula == oracle, q(tree, p) + ": formula " + std::to_string(formula) + ", oracle " +
                                        std::to_string(oracle));
      }
    }
  }
  return t.result();
}

std::pair<bool, std::string> structural_lemmas(const OracleBudget& budget) {
  Tally t;
  const LemmaReport rep = verify_structural_lemmas(6, 8, budget);
  for (const auto& c : rep.checks)
    t.expect(c.violators == 0, c.name + " at p=" + std::to_string(c.p) + ": " + std::to_string(c.violators) +
                                   " violators, max " + std::to_string(c.max_edges));
  std::string literal;
  for (F f : {F::T1, F::T2}) {
    for (int p = 7; p <= 9; ++p) {
      const auto r = verify_connected_extremal(7, f, p, budget);
      t.expect(r.passed(), q(r.tree, p) + ": connected extremal graph with " + std::to_string(r.connected_max) +
                               " edges, expected " + std::to_string(r.expected));
      if (r.connected_max != r.expected)
        literal += (literal.empty() ? "" : ", ") + q(r.tree, p) + " connected max " +
                   std::to_string(r.connected_max) + " vs ex " + std::to_string(r.ex);
    }
  }
  auto [ok, detail] = t.result();
  if (!literal.empty())
    detail += "; no connected graph is extremal (lemma vacuous), and the connected maximum is not floor((n-4)p/2): " +
              literal;
  return {ok, detail};
}

std::pair<bool, std::string> witness_validity() {
  Tally t;
  for (F f : {F::T1, F::T2, F::Path, F::Star, F::TPrime}) {
    for (int n = 5; n <= 20; ++n) {
      for (int p = n - 1; p <= std::min(4 * n, 60); ++p) {
        const TreeSpec tree{f, n};
        try {
          const Construction c = extremal_witness(tree, p);
          t.expect(c.graph.edge_count() == ex_value(tree, p).value && c.graph.order() == p, q(tree, p));
        } catch (const Error& e) {
          t.expect(false, q(tree, p) + ": " + e.what());
        }
      }
    }
  }
  return t.result();
}

struct RamseyInstance {
  TreeSpec left;
  TreeSpec right;
  std::int64_t value;
  std::string rule;
};

std::vector<RamseyInstance> witness_instances() {
  std::vector<RamseyInstance> out;
  for (F a : {F::T1, F::T2})
    for (F b : {F::T1, F::T2}) {
      out.push_back({{a, 12}, {b, 12}, 18, "Thm 4.1"});
      out.push_back({{a, 17}, {b, 17}, 27, "Thm 4.1"});
    }
  for (F a : {F::T1, F::T2}) {
    out.push_back({{a, 8}, {F::TPrime, 8}, 11, "Thm 4.2"});
    out.push_back({{a, 8}, {F::TStar, 8}, 11, "Thm 4.2"});
    out.push_back({{F::Path, 5}, {a, 8}, 9, "Thm 4.3"});
    out.push_back({{a, 5}, {F::TPrime, 7}, 9, "Thm 5.2"});
    out.push_back({{F::TPrime, 9}, {a, 10}, 14, "Thm 6.3"});
    for (F g : {F::T1, F::T2, F::TPrime}) out.push_back({{g, 5}, {a, 8}, 9, "Thm 6.2"});
    for (F g : {F::T1, F::T2, F::TStar}) out.push_back({{g, 12}, {a, 13}, 19, "Thm 6.5"});
  }
  return out;
}

std::pair<bool, std::string> ramsey_witnesses() {
  Tally t;
  for (const auto& inst : witness_instances()) {
    const std::string name = q(inst.left, inst.right);
    try {
      const RamseyAnswer ans = ramsey_value(inst.left, inst.right);
      t.expect(ans.value() == inst.value && ans.rule == inst.rule,
               name + ": got rule " + ans.rule + " value " + (ans.value() ? std::to_string(*ans.value()) : "none"));
      const Construction c = ramsey_witness(inst.left, inst.right);
      t.expect(c.graph.order() == inst.value - 1, name + ": witness order " + std::to_string(c.graph.order()));
    } catch (const Error& e) {
      t.expect(false, name + ": " + e.what());
    }
  }
  return t.result();
}

std::pair<bool, std::string> turan_upper_bounds() {
  Tally t;
  std::vector<RamseyInstance> cases;
  for (F a : {F::T1, F::T2})
    for (F b : {F::T1, F::T2}) {
      cases.push_back({{a, 12}, {b, 12}, 18, "Thm 4.1"});
      cases.push_back({{a, 17}, {b, 17}, 27, "Thm 4.1"});
      cases.push_back({{a, 12}, {b, 13}, 19, "Thm 6.5"});
    }
  for (F b : {F::T1, F::T2}) {
    cases.push_back({{F::Path, 5}, {b, 8}, 9, "Thm 4.3"});
    cases.push_back({{F::Path, 17}, {b, 17}, 27, "Thm 4.3"});
    cases.push_back({{F::Star, 6}, {b, 9}, 11, "Thm 6.1"});
    cases.push_back({{F::TPrime, 9}, {b, 10}, 14, "Thm 6.3"});
    cases.push_back({{F::TPrime, 16}, {b, 17}, 27, "Thm 6.3"});
  }
  for (const auto& c : cases) {
    const std::string name = q(c.left, c.right);
    const RamseyAnswer ans = ramsey_value(c.left, c.right);
    t.expect(ans.value() == c.value && ans.rule == c.rule, name + ": rule table gives " + ans.rule);
    t.expect(ramsey_upper_via_turan(c.left, c.right, c.value).holds, name + ": sum bound fails at the value");
    t.expect(!ramsey_upper_via_turan(c.left, c.right, c.value - 1).holds, name + ": sum bound holds below the value");
  }
  return t.result();
}

std::pair<bool, std::string> spot_values() {
  Tally t;
  const std::vector<RamseyInstance> cases = {
      {{F::Star, 5}, {F::Star, 5}, 7, "Eq. 1.2"},   {{F::Star, 4}, {F::Star, 4}, 6, "Eq. 1.2"},
      {{F::Star, 6}, {F::TStar, 8}, 11, "Eq. 1.4"}, {{F::T1, 17}, {F::T1, 17}, 27, "Thm 4.1"},
      {{F::T1, 12}, {F::T2, 12}, 18, "Thm 4.1"},    {{F::T2, 8}, {F::TPrime, 8}, 11, "Thm 4.2"},
      {{F::Star, 6}, {F::T1, 9}, 11, "Thm 6.1"},    {{F::T1, 12}, {F::T2, 13}, 19, "Thm 6.5"},
  };
  for (const auto& c : cases) {
    const RamseyAnswer ans = ramsey_value(c.left, c.right);
    t.expect(ans.kind == RamseyKind::Exact && ans.value() == c.value && ans.rule == c.rule,
             q(c.left, c.right) + ": got " + std::string(kind_name(ans.kind)) + " " + ans.rule);
  }
  return t.result();
}

std::pair<bool, std::string> exhaustive_ramsey(const OracleBudget& budget) {
  Tally t;
  const Graph claw = make_tree({F::Star, 4});
  const Graph p4 = make_tree({F::Path, 4});
  const auto star_value = ramsey_oracle_number(claw, claw, budget);
  t.expect(star_value == 6, "r(K_{1,3}, K_{1,3}) = " + std::to_string(star_value));
  const auto path_value = ramsey_oracle_number(p4, p4, budget);
  t.expect(path_value == 5, "r(P_4, P_4) = " + std::to_string(path_value));
  return t.result();
}

std::pair<bool, std::string> frobenius() {
  Tally t;
  for (std::int64_t a = 1; a <= 20; ++a)
    for (std::int64_t b = 1; b <= 20; ++b) {
      if (std::gcd(a, b) != 1) continue;
      const std::int64_t start = (a - 1) * (b - 1);
      for (std::int64_t v = start; v <= start + 200; ++v) {
        const auto rep = frobenius_rep(a, b, v);
        t.expect(rep && rep->x >= 0 && rep->y >= 0 && a * rep->x + b * rep->y == v,
                 "t=" + std::to_string(v) + " a=" + std::to_string(a) + " b=" + std::to_string(b));
      }
    }
  return t.result();
}

std::pair<bool, std::string> formula_consistency() {
  Tally t;
  for (std::int64_t n = 5; n <= 60; ++n)
    for (std::int64_t p = n - 1; p <= 1000; ++p) {
      const auto a = ex_t1t2_max_form(n, p);
      const auto b = ex_t1t2_piecewise(n, p);
      const auto v1 = ex_value({F::T1, static_cast<int>(n)}, p).value;
      const auto v2 = ex_value({F::T2, static_cast<int>(n)}, p).value;
      const bool ok = a == b && (p < n || (v1 == a && v2 == a));
      t.expect(ok && v1 == v2, "n=" + std::to_string(n) + " p=" + std::to_string(p));
    }
  return t.result();
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const OracleBudget& budget,
                                            const std::function<void(const CriterionResult&)>& report) {
  const std::vector<std::pair<std::string, std::function<std::pair<bool, std::string>()>>> criteria = {
      {"oracle/formula equivalence for ex", [&] { return oracle_turan(budget); }},
      {"structural lemmas at small orders", [&] { return structural_lemmas(budget); }},
      {"extremal witness validity", [] { return witness_validity(); }},
      {"Ramsey lower-bound witnesses verify", [] { return ramsey_witnesses(); }},
      {"Turan-sum upper bounds are tight", [] { return turan_upper_bounds(); }},
      {"Ramsey spot values", [] { return spot_values(); }},
      {"exhaustive Ramsey sanity", [&] { return exhaustive_ramsey(budget); }},
      {"Frobenius representations", [] { return frobenius(); }},
      {"formula self-consistency", [] { return formula_consistency(); }},
  };
  std::vector<CriterionResult> results;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    CriterionResult r;
    r.id = static_cast<int>(i + 1);
    r.name = criteria[i].first;
    const auto start = std::chrono::steady_clock::now();
    try {
      std::tie(r.passed, r.detail) = criteria[i].second();
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = std::string("error: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (report) report(r);
    results.push_back(std::move(r));
  }
  return results;
}

std::string format_criterion(const CriterionResult& r) {
  char secs[32];
  std::snprintf(secs, sizeof secs, "%.2fs", r.seconds);
  std::ostringstream out;
  out << (r.passed ? "PASS" : "FAIL") << " [" << r.id << "] " << r.name << " (" << secs << "): " << r.detail;
  return out.str();
}

}  // namespace trt
