#include "trt/turan.hpp"

#include <algorithm>
#include <numeric>

#include "trt/errors.hpp"

namespace trt {

namespace {

std::int64_t exact_half(std::int64_t x) {
  if (x % 2 != 0) throw InternalConsistencyError("expected an even numerator, got " + std::to_string(x));
  return x / 2;
}

std::int64_t floor_half(std::int64_t x) {
  if (x < 0) throw InternalConsistencyError("negative numerator in a floor-halved edge count");
  return x / 2;
}

void split(std::int64_t n, std::int64_t p, std::int64_t& k, std::int64_t& r) {
  if (p < n - 1) {
    k = 0;
    r = p;
  } else {
    k = p / (n - 1);
    r = p % (n - 1);
  }
}

std::int64_t r_of(std::int64_t n, std::int64_t p) { return p % (n - 1); }

// Extremal graph of the tprime deficit case: (k-1)K_{n-1} + near-regular of degree n-3.
std::int64_t tprime_deficit_value(std::int64_t n, std::int64_t p) {
  return floor_half((n - 2) * (p - 1) - r_of(n, p) - 1);
}

WitnessDescriptor clique_union_witness(std::int64_t n, std::int64_t k, std::int64_t r) {
  WitnessDescriptor w;
  w.add_cliques(static_cast<int>(k), static_cast<int>(n - 1));
  w.add_cliques(1, static_cast<int>(r));
  return w;
}

WitnessDescriptor deficit_witness(std::int64_t n, std::int64_t k, std::int64_t r, std::int64_t degree) {
  WitnessDescriptor w;
  w.add_cliques(static_cast<int>(k - 1), static_cast<int>(n - 1));
  w.add_degree_sequence(near_regular_degrees(static_cast<int>(n - 1 + r), static_cast<int>(degree)));
  return w;
}

void require_t1t2(const TreeSpec& tree) {
  if (!is_t1_or_t2(tree.family))
    throw InvalidArgument("only t1 and t2 are supported here, got " + to_string(tree));
  if (tree.n < 5) throw FormulaDomainError("outside theorem domain: t1/t2 need n >= 5");
}

}  // namespace

std::string_view branch_name(ExBranch b) {
  switch (b) {
    case ExBranch::CliqueUnion:
      return "CLIQUE_UNION";
    case ExBranch::Deficit:
      return "DEFICIT";
    case ExBranch::TrivialComplete:
      return "TRIVIAL_COMPLETE";
    case ExBranch::Special:
      return "SPECIAL";
  }
  return "?";
}

std::int64_t deficit_branch_value(std::int64_t n, std::int64_t p) {
  return floor_half((n - 2) * p) - (n - 1 + r_of(n, p));
}

std::int64_t clique_union_value(std::int64_t n, std::int64_t p) {
  const std::int64_t r = r_of(n, p);
  return exact_half((n - 2) * p - r * (n - 1 - r));
}

std::int64_t ex_t1t2_max_form(std::int64_t n, std::int64_t p) {
  return std::max(deficit_branch_value(n, p), clique_union_value(n, p));
}

bool t1t2_deficit_case(std::int64_t n, std::int64_t r) {
  return (n >= 16 && 3 <= r && r <= n - 6) || (13 <= n && n <= 15 && 4 <= r && r <= n - 7);
}

std::int64_t ex_t1t2_piecewise(std::int64_t n, std::int64_t p) {
  return t1t2_deficit_case(n, r_of(n, p)) ? deficit_branch_value(n, p) : clique_union_value(n, p);
}

ExResult ex_value(const TreeSpec& tree, std::int64_t p) {
  if (p < 0) throw InvalidArgument("p must be non-negative");
  const std::int64_t n = tree.n;
  if (tree.family == TreeFamily::TStar) throw FormulaDomainError("unsupported family for closed form: tstar");
  if (n < min_order(tree.family)) throw InvalidArgument(to_string(tree) + " is below the family minimum order");

  ExResult out;
  out.tree = tree;
  out.p = p;
  if (p < n) {
    if (n >= 2) split(n, p, out.k, out.r);
    else out.r = p;
    out.value = choose2(p);
    out.branch = ExBranch::TrivialComplete;
    out.branch_values = {out.value};
    out.witness.add_cliques(1, static_cast<int>(p));
    return out;
  }

  switch (tree.family) {
    case TreeFamily::Path: {
      if (n < 2) throw FormulaDomainError("outside theorem domain: every nonempty graph contains P_1");
      split(n, p, out.k, out.r);
      out.value = out.k * choose2(n - 1) + choose2(out.r);
      if (out.value != clique_union_value(n, p))
        throw InternalConsistencyError("path formula forms disagree");
      out.branch = ExBranch::CliqueUnion;
      out.branch_values = {out.value};
      out.witness = clique_union_witness(n, out.k, out.r);
      break;
    }
    case TreeFamily::Star: {
      split(n, p, out.k, out.r);
      out.value = floor_half((n - 2) * p);
      out.branch = ExBranch::Special;
      out.branch_values = {out.value};
      out.witness.add_degree_sequence(near_regular_degrees(static_cast<int>(p), static_cast<int>(n - 2)));
      break;
    }
    case TreeFamily::TPrime: {
      if (n < 5) throw FormulaDomainError("outside theorem domain: tprime needs n >= 5 when p >= n");
      split(n, p, out.k, out.r);
      const bool deficit_case = n >= 7 && 2 <= out.r && out.r <= n - 4;
      const std::int64_t deficit = tprime_deficit_value(n, p);
      const std::int64_t clique = clique_union_value(n, p);
      out.value = deficit_case ? deficit : clique;
      if (out.value != std::max(deficit, clique))
        throw InternalConsistencyError("tprime case split disagrees with the larger construction");
      out.branch_values = {deficit, clique};
      out.tie = deficit == clique;
      if (deficit_case) {
        out.branch = ExBranch::Deficit;
        out.witness = deficit_witness(n, out.k, out.r, n - 3);
      } else {
        out.branch = ExBranch::CliqueUnion;
        out.witness = clique_union_witness(n, out.k, out.r);
      }
      break;
    }
    case TreeFamily::T1:
    case TreeFamily::T2: {
      split(n, p, out.k, out.r);
      const std::int64_t deficit = deficit_branch_value(n, p);
      const std::int64_t clique = clique_union_value(n, p);
      out.value = std::max(deficit, clique);
      out.branch_values = {deficit, clique};
      out.tie = deficit == clique;
      if (deficit >= clique) {
        out.branch = ExBranch::Deficit;
        out.witness = deficit_witness(n, out.k, out.r, n - 4);
      } else {
        out.branch = ExBranch::CliqueUnion;
        out.witness = clique_union_witness(n, out.k, out.r);
      }
      break;
    }
    case TreeFamily::TStar:
      break;
  }
  if (out.value > choose2(p)) throw InternalConsistencyError("Turán value exceeds C(p,2)");
  return out;
}

ExBounds ex_bounds(const TreeSpec& tree, std::int64_t p) {
  require_t1t2(tree);
  const std::int64_t n = tree.n;
  if (p < n) throw FormulaDomainError("bounds need p >= n");
  if (p % (n - 1) == 0) throw FormulaDomainError("corollary hypothesis violated: (n-1) divides p");
  ExBounds b;
  std::int64_t num = 4 * (n - 2) * p - (n - 1) * (n - 1);
  std::int64_t den = 8;
  const std::int64_t g = std::gcd(num, den);
  b.lo_numerator = num / g;
  b.lo_denominator = den / g;
  b.lo = num >= 0 ? (num + den - 1) / den : -((-num) / den);
  b.hi = floor_half((n - 2) * (p - 1));
  return b;
}

CaseExplanation ex_case_explain(const TreeSpec& tree, std::int64_t p) {
  require_t1t2(tree);
  const std::int64_t n = tree.n;
  if (p < n - 1) throw FormulaDomainError("case analysis needs p >= n-1");
  CaseExplanation e;
  e.r = r_of(n, p);
  const std::int64_t r = e.r;
  e.discriminant = r * (n - 3 - r) - 2 * (n - 1);
  e.sign = (e.discriminant > 0) - (e.discriminant < 0);

  const bool small_n = n <= 12;
  const bool listed = r <= 2 || r >= n - 5;
  const bool mid_n = 13 <= n && n <= 15;
  e.trace.push_back({"n <= 12", small_n});
  e.trace.push_back({"r in {0,1,2,n-5,n-4,n-3,n-2}", listed});
  e.trace.push_back({"13 <= n <= 15 and 4 <= r <= n-7", mid_n && 4 <= r && r <= n - 7});
  e.trace.push_back({"n >= 16 and 3 <= r <= n-6", n >= 16 && 3 <= r && r <= n - 6});
  if (small_n)
    e.regime = "n <= 12: r(n-3-r) - 2(n-1) <= ((n-7)^2 - 32)/4 < 0";
  else if (listed)
    e.regime = "r in {0,1,2,n-5,n-4,n-3,n-2}: r(n-3-r) - 2(n-1) < 0";
  else if (mid_n && (r == 3 || r == n - 6))
    e.regime = "13 <= n <= 15 and r in {3, n-6}: r(n-3-r) - 2(n-1) = n-16 < 0";
  else if (mid_n)
    e.regime = "13 <= n <= 15 and 4 <= r <= n-7: r(n-3-r) - 2(n-1) >= 2n-26 >= 0";
  else
    e.regime = "n >= 16 and 3 <= r <= n-6: r(n-3-r) - 2(n-1) >= n-16 >= 0";

  const ExResult ex = ex_value(tree, std::max<std::int64_t>(p, n));
  (void)ex;
  const std::int64_t deficit = deficit_branch_value(n, p);
  const std::int64_t clique = clique_union_value(n, p);
  e.tie = deficit == clique;
  e.branch = deficit >= clique ? ExBranch::Deficit : ExBranch::CliqueUnion;
  return e;
}

}  // namespace trt
