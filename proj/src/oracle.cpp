#include "trt/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <string>

#include "trt/containment.hpp"
#include "trt/errors.hpp"
#include "trt/turan.hpp"

namespace trt {

namespace {

std::size_t idx(int v) { return static_cast<std::size_t>(v); }

bool small_connected(const SmallGraph& g) {
  if (g.n <= 1) return true;
  std::uint32_t seen = 1U, frontier = 1U;
  while (frontier) {
    std::uint32_t next = 0;
    for (int v = 0; v < g.n; ++v)
      if ((frontier >> v) & 1U) next |= g.adj[idx(v)];
    frontier = next & ~seen;
    seen |= next;
  }
  return std::popcount(seen) == g.n;
}

int small_max_degree(const SmallGraph& g) {
  int best = 0;
  for (int v = 0; v < g.n; ++v) best = std::max(best, g.degree(v));
  return best;
}

bool contains_tree(const SmallGraph& g, const Graph& tree) {
  if (g.n < tree.order()) return false;
  return contains_subgraph(g.to_graph(), tree);
}

void check_order(int p, const OracleBudget& budget) {
  if (p < 0) throw InvalidArgument("order must be non-negative");
  if (p > budget.max_order || p > kSmallMaxOrder)
    throw BudgetExceeded("order " + std::to_string(p) + " exceeds the enumeration cap " +
                         std::to_string(std::min(budget.max_order, kSmallMaxOrder)));
}

}  // namespace

OracleBudget OracleBudget::from_env() {
  OracleBudget b;
  if (const char* env = std::getenv("TRT_MAX_ORDER")) {
    try {
      const int v = std::stoi(env);
      if (v >= 0) b.max_order = v;
    } catch (const std::exception&) {
      throw InvalidArgument("TRT_MAX_ORDER must be an integer");
    }
  }
  return b;
}

GraphEnumerator::GraphEnumerator(int target_order, const OracleBudget& budget)
    : target_(target_order), budget_(budget) {
  check_order(target_order, budget);
}

void GraphEnumerator::tick() {
  if ((++nodes_ & 0xFFF) == 0 && std::chrono::steady_clock::now() - start_ > budget_.time_limit)
    throw BudgetExceeded("oracle time limit exceeded");
}

bool GraphEnumerator::can_beat_incumbent(int order, int edges) const {
  if (!incumbent_ || order < 2) return true;
  const auto inc = incumbent_();
  if (!inc) return true;
  const std::int64_t p = target_;
  const std::int64_t q = order;
  // Deleting a minimum-degree vertex never lowers edge density, so no
  // descendant at order p is denser than this graph.
  const std::int64_t bound = static_cast<std::int64_t>(edges) * p * (p - 1) / (q * (q - 1));
  return bound > *inc;
}

bool GraphEnumerator::accept_child(const SmallGraph& child) const {
  const int v = child.n - 1;
  int min_deg = child.n;
  for (int u = 0; u < child.n; ++u) min_deg = std::min(min_deg, child.degree(u));
  if (child.degree(v) != min_deg) return false;

  auto key = [&](int u) {
    int s = 0;
    for (int w = 0; w < child.n; ++w)
      if (child.has_edge(u, w)) s += child.degree(w);
    return s;
  };
  int best_key = -1;
  int ties = 0;
  for (int u = 0; u < child.n; ++u) {
    if (child.degree(u) != min_deg) continue;
    const int k = key(u);
    if (k > best_key) {
      best_key = k;
      ties = 1;
    } else if (k == best_key) {
      ++ties;
    }
  }
  if (key(v) != best_key) return false;
  if (ties == 1) return true;

  const CanonicalForm cf = canonical_form(child);
  int chosen = -1;
  for (int u = 0; u < child.n; ++u) {
    if (child.degree(u) != min_deg || key(u) != best_key) continue;
    if (chosen < 0 || cf.pos[idx(u)] > cf.pos[idx(chosen)]) chosen = u;
  }
  return cf.orbit[idx(v)] == cf.orbit[idx(chosen)];
}

void GraphEnumerator::expand(const SmallGraph& g, const Visitor& visit) {
  tick();
  if (g.n == target_) {
    visit(g);
    return;
  }
  const CanonicalForm cf = canonical_form(g);
  const int k = g.n;
  const std::uint32_t subsets = 1U << k;
  std::vector<bool> seen(subsets, false);
  const int edges = g.edge_count();
  std::vector<std::uint32_t> orbit;
  for (std::uint32_t s = 0; s < subsets; ++s) {
    if (seen[s]) continue;
    // One child per orbit of Aut(g) on subsets; s is the orbit's minimum.
    orbit.assign(1, s);
    seen[s] = true;
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      for (const auto& gen : cf.generators) {
        std::uint32_t image = 0;
        for (int u = 0; u < k; ++u)
          if ((orbit[i] >> u) & 1U) image |= 1U << gen[idx(u)];
        if (!seen[image]) {
          seen[image] = true;
          orbit.push_back(image);
        }
      }
    }
    if (!can_beat_incumbent(k + 1, edges + std::popcount(s))) continue;
    SmallGraph child = g;
    child.n = k + 1;
    child.adj[idx(k)] = s;
    for (int u = 0; u < k; ++u)
      if ((s >> u) & 1U) child.adj[idx(u)] |= 1U << k;
    if (admissible_ && !admissible_(child)) continue;
    if (!accept_child(child)) continue;
    expand(child, visit);
  }
}

void GraphEnumerator::run(const Visitor& visit) {
  start_ = std::chrono::steady_clock::now();
  nodes_ = 0;
  SmallGraph root;
  if (target_ == 0) {
    visit(root);
    return;
  }
  root.n = 1;
  if (admissible_ && !admissible_(root)) return;
  expand(root, visit);
}

std::vector<std::uint64_t> count_graphs(int max_order, const OracleBudget& budget) {
  std::vector<std::uint64_t> counts;
  for (int p = 0; p <= max_order; ++p) {
    GraphEnumerator e(p, budget);
    std::uint64_t c = 0;
    e.run([&](const SmallGraph&) { ++c; });
    counts.push_back(c);
  }
  return counts;
}

ExOracleResult ex_oracle(int p, const Graph& tree, bool connected_only, const OracleBudget& budget,
                         std::optional<std::int64_t> seed) {
  if (!is_tree(tree)) throw NotATree("oracle pattern is not a tree");
  check_order(p, budget);
  auto attempt = [&](std::optional<std::int64_t> floor_value) {
    ExOracleResult res;
    res.seeded = floor_value.has_value();
    std::optional<int> incumbent;
    if (floor_value) incumbent = static_cast<int>(*floor_value);
    bool found = false;
    GraphEnumerator e(p, budget);
    e.set_admissible([&](const SmallGraph& g) { return !contains_tree(g, tree); });
    e.set_incumbent([&] { return incumbent; });
    e.run([&](const SmallGraph& g) {
      if (connected_only && !small_connected(g)) return;
      const int edges = g.edge_count();
      if (incumbent && edges <= *incumbent) return;
      incumbent = edges;
      res.value = edges;
      res.witness = g.to_graph();
      found = true;
    });
    res.nodes = e.nodes();
    return std::make_pair(found, res);
  };
  if (seed) {
    auto [found, res] = attempt(*seed);
    if (found) return res;
  }
  auto [found, res] = attempt(std::nullopt);
  if (!found) throw InternalConsistencyError("no graph of order " + std::to_string(p) + " passed the filters");
  return res;
}

ExOracleResult ex_oracle(int p, const TreeSpec& tree, bool connected_only, const OracleBudget& budget) {
  std::optional<std::int64_t> seed;
  if (!connected_only) {
    try {
      seed = ex_value(tree, p).value - 1;
    } catch (const FormulaDomainError&) {
    }
  }
  return ex_oracle(p, make_tree(tree), connected_only, budget, seed);
}

RamseyOracleResult ramsey_oracle(int N, const Graph& left, const Graph& right, const OracleBudget& budget) {
  if (!is_tree(left) || !is_tree(right)) throw NotATree("oracle patterns must be trees");
  if (N < 0) throw InvalidArgument("order must be non-negative");
  if (N > budget.max_coloring_order || N > kSmallMaxOrder)
    throw BudgetExceeded("order " + std::to_string(N) + " exceeds the coloring cap " +
                         std::to_string(budget.max_coloring_order));
  OracleBudget inner = budget;
  inner.max_order = std::max(inner.max_order, N);
  RamseyOracleResult res;
  GraphEnumerator e(N, inner);
  e.set_admissible([&](const SmallGraph& g) {
    return !contains_tree(g, left) && !contains_tree(complement(g), right);
  });
  struct Found {};
  try {
    e.run([&](const SmallGraph& g) {
      res.counterexample = g.to_graph();
      throw Found{};
    });
  } catch (const Found&) {
  }
  res.arrows = !res.counterexample.has_value();
  res.nodes = e.nodes();
  return res;
}

std::int64_t ramsey_oracle_number(const Graph& left, const Graph& right, const OracleBudget& budget) {
  for (int n = 1; n <= budget.max_coloring_order; ++n)
    if (ramsey_oracle(n, left, right, budget).arrows) return n;
  throw BudgetExceeded("no arrowing order up to the coloring cap " + std::to_string(budget.max_coloring_order));
}

bool LemmaReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const LemmaCheck& c) { return c.violators == 0; });
}

LemmaReport verify_structural_lemmas(int n, int max_p, const OracleBudget& budget) {
  if (n != 6) throw InvalidArgument("structural lemma checks are stated for n = 6 only");
  check_order(max_p, budget);
  const Graph t1 = make_tree({TreeFamily::T1, 6});
  const Graph t2 = make_tree({TreeFamily::T2, 6});
  LemmaReport report;
  for (int p = 6; p <= max_p; ++p) {
    LemmaCheck a{"connected T1-free: e <= 2p-3", p, 0, 2 * p - 3, 0, 0, std::nullopt, false};
    GraphEnumerator ea(p, budget);
    ea.set_admissible([&](const SmallGraph& g) { return !contains_tree(g, t1); });
    ea.run([&](const SmallGraph& g) {
      if (!small_connected(g)) return;
      ++a.graphs_checked;
      a.max_edges = std::max<std::int64_t>(a.max_edges, g.edge_count());
      if (g.edge_count() > a.bound && a.violators++ == 0) a.first_violator = g.to_graph();
    });
    report.checks.push_back(std::move(a));

    const int r = p % 5;
    LemmaCheck b{"T2-free: e <= 2p - r(5-r)/2", p, 0, 2 * p - r * (5 - r) / 2, 0, 0, std::nullopt, false};
    GraphEnumerator eb(p, budget);
    eb.set_admissible([&](const SmallGraph& g) { return !contains_tree(g, t2); });
    eb.run([&](const SmallGraph& g) {
      ++b.graphs_checked;
      b.max_edges = std::max<std::int64_t>(b.max_edges, g.edge_count());
      if (g.edge_count() > b.bound && b.violators++ == 0) b.first_violator = g.to_graph();
    });
    report.checks.push_back(std::move(b));
  }
  if (report.checks.empty()) {
    LemmaCheck v;
    v.name = "orders below 6";
    v.p = max_p;
    v.vacuous = true;
    report.checks.push_back(v);
  }
  return report;
}

ConnectedExtremalReport verify_connected_extremal(int n, TreeFamily family, int p, const OracleBudget& budget) {
  if (!is_t1_or_t2(family)) throw InvalidArgument("connected extremal checks need t1 or t2");
  if (!(p >= n && n >= 7)) throw InvalidArgument("connected extremal checks need p >= n >= 7");
  check_order(p, budget);
  ConnectedExtremalReport rep;
  rep.tree = {family, n};
  rep.p = p;
  rep.expected = static_cast<std::int64_t>(n - 4) * p / 2;
  const Graph tree = make_tree(rep.tree);
  rep.ex = ex_oracle(p, tree, false, budget).value;

  std::optional<int> best;
  GraphEnumerator e(p, budget);
  e.set_admissible([&](const SmallGraph& g) { return !contains_tree(g, tree); });
  e.set_incumbent([&] { return best ? std::optional<int>(*best - 1) : std::nullopt; });
  e.run([&](const SmallGraph& g) {
    if (!small_connected(g)) return;
    const int edges = g.edge_count();
    if (best && edges < *best) return;
    if (!best || edges > *best) {
      best = edges;
      rep.degree_all_match = true;
      rep.witness = g.to_graph();
    }
    rep.degree_all_match = rep.degree_all_match && small_max_degree(g) == n - 4;
  });
  rep.connected_max = best.value_or(0);
  return rep;
}

}  // namespace trt
