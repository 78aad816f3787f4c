#include "trt/ramsey.hpp"

#include <algorithm>
#include <functional>

#include "trt/errors.hpp"
#include "trt/turan.hpp"

namespace trt {

namespace {

using F = TreeFamily;

bool is_ti(F f) { return f == F::T1 || f == F::T2; }

std::string str(std::int64_t v) { return std::to_string(v); }

struct Claim {
  std::string rule;
  bool exact = false;
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  std::optional<WitnessDescriptor> witness;
  std::string annotation;
};

WitnessDescriptor cliques(std::int64_t count, std::int64_t k) {
  WitnessDescriptor w;
  w.add_cliques(static_cast<int>(count), static_cast<int>(k));
  return w;
}

class RuleTable {
 public:
  RuleTable(const TreeSpec& left, const TreeSpec& right)
      : left_(left), right_(right), fl_(left.family), fr_(right.family), m_(left.n), n_(right.n) {}

  std::vector<Claim> evaluate() {
    const std::vector<std::function<std::optional<Claim>()>> rules = {
        [&] { return star_star(); },          [&] { return star_tprime(); },
        [&] { return star_tstar(); },         [&] { return star_equal(); },
        [&] { return ti_tj_equal(); },        [&] { return ti_vs_tprime_tstar_equal(); },
        [&] { return path_vs_ti(); },         [&] { return tprime_vs_next(); },
        [&] { return ti_vs_next(); },         [&] { return tree_vs_star_divisible(); },
        [&] { return ti_vs_tprime_divisible(); }, [&] { return gm_vs_tj_divisible(); },
        [&] { return tree_vs_star_general(); }, [&] { return ti_vs_star(); },
        [&] { return ti_vs_tprime_tstar(); }, [&] { return star_vs_tj(); },
        [&] { return tprime_vs_tj(); },       [&] { return gm_vs_tj(); },
    };
    std::vector<Claim> claims;
    for (const auto& rule : rules)
      if (auto c = rule()) claims.push_back(std::move(*c));
    return claims;
  }

  std::vector<RuleCheck> take_trace() { return std::move(trace_); }

 private:
  bool check(const std::string& rule, const std::string& condition, bool holds) {
    trace_.push_back({rule, condition, holds});
    return holds;
  }

  Claim exact(const std::string& rule, std::int64_t v, std::optional<WitnessDescriptor> w = std::nullopt) {
    return Claim{rule, true, v, v, std::move(w), {}};
  }
  Claim range(const std::string& rule, std::int64_t lo, std::int64_t hi,
              std::optional<WitnessDescriptor> w = std::nullopt) {
    return Claim{rule, false, lo, hi, std::move(w), {}};
  }

  // Burr-Roberts stars.
  std::optional<Claim> star_star() {
    const std::string R = "Eq. 1.2";
    if (!check(R, "left and right are stars", fl_ == F::Star && fr_ == F::Star)) return {};
    if (!check(R, "m >= 3 and n >= 3", m_ >= 3 && n_ >= 3)) return {};
    const bool odd = check(R, "mn odd", (m_ * n_) % 2 != 0);
    return exact(R, odd ? m_ + n_ - 3 : m_ + n_ - 2);
  }

  std::optional<Claim> star_tprime() {
    const std::string R = "Eq. 1.3";
    if (!check(R, "left star, right tprime", fl_ == F::Star && fr_ == F::TPrime)) return {};
    if (!check(R, "n > m >= 4", n_ > m_ && m_ >= 4)) return {};
    const bool even = check(R, "m(n-1) even", (m_ * (n_ - 1)) % 2 == 0);
    return exact(R, even ? m_ + n_ - 3 : m_ + n_ - 4);
  }

  std::optional<Claim> star_tstar() {
    const std::string R = "Eq. 1.4";
    if (!check(R, "left star, right tstar", fl_ == F::Star && fr_ == F::TStar)) return {};
    if (!check(R, "n > m >= 6", n_ > m_ && m_ >= 6)) return {};
    if (check(R, "(m-1) | (n-3)", (n_ - 3) % (m_ - 1) == 0))
      return exact(R, m_ + n_ - 3, cliques((n_ - 3) / (m_ - 1) + 1, m_ - 1));
    return exact(R, m_ + n_ - 4);
  }

  std::optional<Claim> star_equal() {
    const std::string R = "Remark 4.1";
    if (!check(R, "left star, right t1/t2", fl_ == F::Star && is_ti(fr_))) return {};
    if (!check(R, "m = n >= 4", m_ == n_ && n_ >= 4)) return {};
    return exact(R, 2 * n_ - 3);
  }

  std::optional<Claim> ti_tj_equal() {
    const std::string R = "Thm 4.1";
    if (!check(R, "left and right in {t1,t2}", is_ti(fl_) && is_ti(fr_))) return {};
    if (!check(R, "m = n", m_ == n_)) return {};
    if (n_ % 2 != 0) {
      if (!check(R, "n odd and n >= 17", n_ >= 17)) return {};
      return exact(R, 2 * n_ - 7);
    }
    if (!check(R, "n even and n >= 12", n_ >= 12)) return {};
    return exact(R, 2 * n_ - 6);
  }

  std::optional<Claim> ti_vs_tprime_tstar_equal() {
    const std::string R = "Thm 4.2";
    if (!check(R, "left t1/t2, right tprime/tstar", is_ti(fl_) && (fr_ == F::TPrime || fr_ == F::TStar))) return {};
    if (!check(R, "m = n >= 8", m_ == n_ && n_ >= 8)) return {};
    return exact(R, 2 * n_ - 5, cliques(2, n_ - 3));
  }

  std::optional<Claim> path_vs_ti() {
    const std::string R = "Thm 4.3";
    if (!check(R, "left path, right t1/t2", fl_ == F::Path && is_ti(fr_))) return {};
    const std::int64_t s = n_ - m_;
    if (!check(R, "m = n-s with s in {0,1,2,3}", 0 <= s && s <= 3)) return {};
    static constexpr std::int64_t kMinN[] = {17, 13, 11, 8};
    if (!check(R, "n >= " + str(kMinN[s]) + " for s = " + str(s), n_ >= kMinN[s])) return {};
    return exact(R, 2 * n_ - 7, cliques(2, n_ - 4));
  }

  std::optional<Claim> tprime_vs_next() {
    const std::string R = "Thm 6.3";
    if (!check(R, "left tprime, right t1/t2", fl_ == F::TPrime && is_ti(fr_))) return {};
    if (!check(R, "n = m+1", n_ == m_ + 1)) return {};
    if (m_ % 2 != 0) {
      if (!check(R, "m odd and m >= 9", m_ >= 9)) return {};
      return exact(R, 2 * m_ - 4);
    }
    if (!check(R, "m even and m >= 16", m_ >= 16)) return {};
    return exact(R, 2 * m_ - 5);
  }

  std::optional<Claim> ti_vs_next() {
    const std::string R = "Thm 6.5";
    if (!check(R, "left t1/t2/tstar, right t1/t2", (is_ti(fl_) || fl_ == F::TStar) && is_ti(fr_))) return {};
    if (!check(R, "n = m+1 and m >= 12", n_ == m_ + 1 && m_ >= 12)) return {};
    return exact(R, 2 * m_ - 5);
  }

  std::optional<Claim> tree_vs_star_divisible() {
    const std::string R = "Prop 5.1";
    if (!check(R, "right star", fr_ == F::Star)) return {};
    if (!check(R, "m >= 3", m_ >= 3)) return {};
    if (!check(R, "(m-1) | (n-2)", (n_ - 2) % (m_ - 1) == 0)) return {};
    return exact(R, m_ + n_ - 2, cliques((n_ - 2) / (m_ - 1) + 1, m_ - 1));
  }

  std::optional<Claim> ti_vs_tprime_divisible() {
    const std::string R = "Thm 5.2";
    if (!check(R, "left t1/t2, right tprime", is_ti(fl_) && fr_ == F::TPrime)) return {};
    if (!check(R, "m >= 5", m_ >= 5)) return {};
    if (!check(R, "(m-1) | (n-3)", (n_ - 3) % (m_ - 1) == 0)) return {};
    return exact(R, m_ + n_ - 3, cliques((n_ - 3) / (m_ - 1) + 1, m_ - 1));
  }

  std::optional<Claim> gm_vs_tj_divisible() {
    const std::string R = "Thm 6.2";
    if (!check(R, "right t1/t2", is_ti(fr_))) return {};
    std::int64_t min_m = 0;
    switch (fl_) {
      case F::Path:
        min_m = 4;
        break;
      case F::TPrime:
      case F::T1:
      case F::T2:
        min_m = 5;
        break;
      case F::TStar:
        min_m = 6;
        break;
      case F::Star:
        break;
    }
    if (!check(R, "left in {path, tprime, tstar, t1, t2}", min_m > 0)) return {};
    if (!check(R, "m >= " + str(min_m) + " and n >= 7", m_ >= min_m && n_ >= 7)) return {};
    if (!check(R, "(m-1) | (n-4)", (n_ - 4) % (m_ - 1) == 0)) return {};
    return exact(R, m_ + n_ - 4, cliques((n_ - 4) / (m_ - 1) + 1, m_ - 1));
  }

  std::optional<Claim> tree_vs_star_general() {
    const std::string R = "Prop 5.2";
    if (!check(R, "right star, left not a star", fr_ == F::Star && fl_ != F::Star)) return {};
    if (!check(R, "m >= 3 and n >= m-1", m_ >= 3 && n_ >= m_ - 1)) return {};
    const std::int64_t k = n_ / (m_ - 1);
    const std::int64_t b = n_ % (m_ - 1);
    if (!check(R, "n != 2 (mod m-1)", (n_ - 2) % (m_ - 1) != 0)) return {};
    auto w = clique_pair_witness(m_, m_ + n_ - 4);
    if (check(R, "k >= m-b with n = k(m-1)+b", k >= m_ - b)) return exact(R, m_ + n_ - 3, std::move(w));
    return range(R, 0, m_ + n_ - 3);
  }

  std::optional<Claim> ti_vs_star() {
    const std::string R = "Thm 5.1";
    if (!check(R, "right star, left not a star", fr_ == F::Star && fl_ != F::Star)) return {};
    if (!check(R, "n > m >= 5", n_ > m_ && m_ >= 5)) return {};
    if (!check(R, "(m-1) does not divide (n-2)", (n_ - 2) % (m_ - 1) != 0)) return {};
    auto w = clique_pair_witness(m_, m_ + n_ - 4);
    const bool big = check(R, "n >= (m-3)^2 + 1", n_ >= (m_ - 3) * (m_ - 3) + 1);
    const bool rep = check(R, "m+n-4 = (m-1)x + (m-2)y", w.has_value());
    if (big || rep) return exact(R, m_ + n_ - 3, std::move(w));
    if (!check(R, "left t1/t2", is_ti(fl_))) return {};
    return range(R, m_ + n_ - 4, m_ + n_ - 3);
  }

  std::optional<Claim> ti_vs_tprime_tstar() {
    const std::string R = "Thm 5.3";
    if (!check(R, "left t1/t2, right tprime/tstar", is_ti(fl_) && (fr_ == F::TPrime || fr_ == F::TStar))) return {};
    if (!check(R, "n > m >= 5", n_ > m_ && m_ >= 5)) return {};
    if (!check(R, "(m-1) does not divide (n-3)", (n_ - 3) % (m_ - 1) != 0)) return {};
    const std::int64_t k = n_ / (m_ - 1);
    const std::int64_t b = n_ % (m_ - 1);
    const std::int64_t a = n_ % (m_ - 2);
    const bool c1 = check(R, "(1) b in {1,2,4}", b == 1 || b == 2 || b == 4);
    const bool c2 = check(R, "(2) b = 0 and k >= 3", b == 0 && k >= 3);
    const bool c3 = check(R, "(3) n >= (m-3)^2 + 2", n_ >= (m_ - 3) * (m_ - 3) + 2);
    const bool c4 = check(R, "(4) n >= m^2 - 1 - b(m-2)", n_ >= m_ * m_ - 1 - b * (m_ - 2));
    const bool c5 = check(R, "(5) a >= 3 and n >= (a-4)(m-1) + 4", a >= 3 && n_ >= (a - 4) * (m_ - 1) + 4);
    if (c1 || c2 || c3 || c4 || c5) return exact(R, m_ + n_ - 4, clique_pair_witness(m_, m_ + n_ - 5));
    const std::int64_t lo = fr_ == F::TPrime ? m_ + n_ - 5 : m_ + n_ - 6;
    return range(R, lo, m_ + n_ - 4);
  }

  std::optional<Claim> star_vs_tj() {
    const std::string R = "Thm 6.1";
    if (!check(R, "left star, right t1/t2", fl_ == F::Star && is_ti(fr_))) return {};
    if (!check(R, "m >= 5, n >= 8, n > m", m_ >= 5 && n_ >= 8 && n_ > m_)) return {};
    if (check(R, "mn even", (m_ * n_) % 2 == 0)) return exact(R, m_ + n_ - 4);
    Claim c = range(R, m_ + n_ - 5, m_ + n_ - 4);
    c.annotation = "conjectured value " + str(m_ + n_ - 4) + " (open for odd mn)";
    return c;
  }

  bool far_enough(const std::string& R) {
    return check(R, "n >= max(m+2, 19-m)", n_ >= std::max(m_ + 2, 19 - m_));
  }

  std::optional<Claim> tprime_vs_tj() {
    const std::string R = "Thm 6.3";
    if (!check(R, "left tprime, right t1/t2", fl_ == F::TPrime && is_ti(fr_))) return {};
    if (!check(R, "m >= 7", m_ >= 7)) return {};
    if (!far_enough(R)) return {};
    if (!check(R, "(m-1) does not divide (n-4)", (n_ - 4) % (m_ - 1) != 0)) return {};
    return exact(R, m_ + n_ - 5);
  }

  std::optional<Claim> gm_vs_tj() {
    const std::string R = "Thm 6.4";
    const bool left_ok = fl_ == F::Path || fl_ == F::TStar || is_ti(fl_);
    if (!check(R, "left in {path, tstar, t1, t2}, right t1/t2", left_ok && is_ti(fr_))) return {};
    if (!check(R, "m >= 7", m_ >= 7)) return {};
    if (!check(R, "(m-1) does not divide (n-4)", (n_ - 4) % (m_ - 1) != 0)) return {};
    const bool adjacent = check(R, "n = m+1 >= 12", n_ == m_ + 1 && n_ >= 12);
    if (!adjacent && !far_enough(R)) return {};
    auto w = clique_pair_witness(m_, m_ + n_ - 6);
    const bool big = check(R, "n >= (m-3)^2 + 3", n_ >= (m_ - 3) * (m_ - 3) + 3);
    const bool rep = check(R, "m+n-6 = (m-1)x + (m-2)y", w.has_value());
    auto divides = [&](std::int64_t b) { return (n_ - b) % (m_ - 1) == 0; };
    const bool cor = check(R, "(m-1) | (n-b) with b in {2,3,5} and n >= max(m+2, 19-m)",
                           (divides(2) || divides(3) || divides(5)) && n_ >= std::max(m_ + 2, 19 - m_));
    if (big || rep || cor) return exact(R, m_ + n_ - 5, std::move(w));
    return range(R, 0, m_ + n_ - 5);
  }

  TreeSpec left_, right_;
  F fl_, fr_;
  std::int64_t m_, n_;
  std::vector<RuleCheck> trace_;
};

bool agrees(const Claim& fired, const Claim& other) {
  if (fired.exact) return other.lo <= fired.lo && fired.lo <= other.hi;
  return std::max(fired.lo, other.lo) <= std::min(fired.hi, other.hi);
}

std::optional<WitnessDescriptor> lemma_witness(const TreeSpec& left, const TreeSpec& right, std::int64_t lo) {
  const auto best = best_degree_bound(left, right);
  if (!best || best->value != lo) return std::nullopt;
  return degree_bound_witness(tree_max_degree(left), tree_max_degree(right), left.n, best->mode);
}

}  // namespace

std::string_view kind_name(RamseyKind k) {
  switch (k) {
    case RamseyKind::Exact:
      return "exact";
    case RamseyKind::Range:
      return "range";
    case RamseyKind::Unknown:
      return "unknown";
  }
  return "?";
}

const std::vector<std::string>& ramsey_rule_order() {
  static const std::vector<std::string> order = {
      "Eq. 1.2", "Eq. 1.3",  "Eq. 1.4",  "Remark 4.1", "Thm 4.1", "Thm 4.2",  "Thm 4.3",
      "Thm 6.3", "Thm 6.5",  "Prop 5.1", "Thm 5.2",    "Thm 6.2", "Prop 5.2", "Thm 5.1",
      "Thm 5.3", "Thm 6.1",  "Thm 6.3",  "Thm 6.4",    "Lemma 4.2"};
  return order;
}

std::optional<DegreeBound> best_degree_bound(const TreeSpec& left, const TreeSpec& right) {
  const std::int64_t d1 = tree_max_degree(left);
  const std::int64_t d2 = tree_max_degree(right);
  const std::int64_t m = left.n;
  if (d1 < 2 || d2 < 2) return std::nullopt;
  DegreeBound best{degree_lower_bound(d1, d2, DegreeBoundMode::Parity), DegreeBoundMode::Parity};
  if (d1 < d2 && d2 <= m) {
    const std::int64_t v = degree_lower_bound(d1, d2, DegreeBoundMode::StarVsBigger);
    if (v > best.value) best = {v, DegreeBoundMode::StarVsBigger};
  }
  if (d1 != m - 1 && d2 > m) {
    const std::int64_t v = degree_lower_bound(d1, d2, DegreeBoundMode::Disconnected);
    if (v > best.value) best = {v, DegreeBoundMode::Disconnected};
  }
  return best;
}

RamseyAnswer ramsey_value(const TreeSpec& left, const TreeSpec& right) {
  for (const TreeSpec& t : {left, right})
    if (t.n < min_order(t.family)) throw InvalidArgument(to_string(t) + " is below the family minimum order");

  RuleTable table(left, right);
  std::vector<Claim> claims = table.evaluate();
  RamseyAnswer ans;
  ans.left = left;
  ans.right = right;
  ans.trace = table.take_trace();

  const auto bound = best_degree_bound(left, right);
  if (bound) {
    ans.trace.push_back({"Lemma 4.2", "both maximum degrees >= 2", true});
    ans.trace.push_back({"Lemma 4.2", "best degree bound = " + std::to_string(bound->value), true});
  } else {
    ans.trace.push_back({"Lemma 4.2", "both maximum degrees >= 2", false});
  }

  auto fired = std::find_if(claims.begin(), claims.end(), [](const Claim& c) { return c.exact; });
  if (fired == claims.end()) fired = claims.begin();
  if (fired == claims.end()) {
    ans.kind = RamseyKind::Unknown;
    ans.rule = "Lemma 4.2";
    if (bound) {
      ans.lo = bound->value;
      ans.witness = lemma_witness(left, right, bound->value);
    }
    return ans;
  }

  for (const Claim& other : claims)
    if (&other != &*fired && !agrees(*fired, other))
      throw InternalConsistencyError(fired->rule + " and " + other.rule + " disagree on " + to_string(left) +
                                     " vs " + to_string(right));

  Claim c = *fired;
  ans.rule = c.rule;
  ans.annotation = c.annotation;
  std::int64_t lo = c.lo;
  if (bound) {
    if (c.exact && bound->value > c.lo)
      throw InternalConsistencyError("degree bound " + std::to_string(bound->value) + " exceeds " + c.rule +
                                     " value " + std::to_string(c.lo));
    lo = std::max(lo, bound->value);
  }
  if (lo > c.hi) throw InternalConsistencyError(c.rule + " range is empty after the degree bound");
  ans.lo = lo;
  ans.hi = c.hi;
  ans.kind = lo == c.hi ? RamseyKind::Exact : RamseyKind::Range;
  if (c.witness && c.witness->order() == lo - 1)
    ans.witness = std::move(c.witness);
  else
    ans.witness = lemma_witness(left, right, lo);
  return ans;
}

TuranSum ramsey_upper_via_turan(const TreeSpec& left, const TreeSpec& right, std::int64_t p) {
  if (p < std::max(left.n, right.n)) throw InvalidArgument("p must be at least both tree orders");
  TuranSum s;
  s.ex_left = ex_value(left, p).value;
  s.ex_right = ex_value(right, p).value;
  s.total = choose2(p);
  s.holds = s.ex_left + s.ex_right < s.total;
  return s;
}

}  // namespace trt
