#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "trt/canon.hpp"
#include "trt/graph.hpp"
#include "trt/trees.hpp"

namespace trt {

/// Hard limits for the exhaustive searches. Exceeding any of them raises
/// BudgetExceeded; partial results are never reported.
struct OracleBudget {
  int max_order = 9;
  int max_coloring_order = 8;
  std::chrono::milliseconds time_limit{std::chrono::minutes(30)};

  /// Defaults, with max_order taken from TRT_MAX_ORDER when set.
  static OracleBudget from_env();
};

/// Isomorphism-free generation of graphs by canonical augmentation.
///
/// Each graph of order k+1 is produced from its canonical parent, the graph
/// left after deleting a canonically chosen minimum-degree vertex. Children
/// of a parent are the additions of a new vertex joined to one subset per
/// orbit of the parent's automorphism group. `admissible` must be
/// hereditary (closed under taking induced subgraphs); inadmissible graphs
/// are dropped with their whole subtree.
class GraphEnumerator {
 public:
  using Predicate = std::function<bool(const SmallGraph&)>;
  using Visitor = std::function<void(const SmallGraph&)>;
  /// Current best edge count at the target order, or nothing to disable
  /// edge-count pruning.
  using Incumbent = std::function<std::optional<int>()>;

  GraphEnumerator(int target_order, const OracleBudget& budget);

  void set_admissible(Predicate p) { admissible_ = std::move(p); }
  void set_incumbent(Incumbent f) { incumbent_ = std::move(f); }

  /// Calls `visit` once per isomorphism class at the target order.
  void run(const Visitor& visit);

  std::uint64_t nodes() const { return nodes_; }

 private:
  void expand(const SmallGraph& g, const Visitor& visit);
  bool accept_child(const SmallGraph& child) const;
  bool can_beat_incumbent(int order, int edges) const;
  void tick();

  int target_;
  OracleBudget budget_;
  Predicate admissible_;
  Incumbent incumbent_;
  std::chrono::steady_clock::time_point start_;
  std::uint64_t nodes_ = 0;
};

/// Number of non-isomorphic graphs of each order 0..max_order.
std::vector<std::uint64_t> count_graphs(int max_order, const OracleBudget& budget);

struct ExOracleResult {
  std::int64_t value = 0;
  Graph witness;
  std::uint64_t nodes = 0;
  bool seeded = false;
};

/// Maximum edge count of a (connected, if asked) tree-free graph of order
/// p, with one maximizer. A seed only prunes: the search looks for graphs
/// with more than `seed` edges and repeats unseeded if none exists.
ExOracleResult ex_oracle(int p, const Graph& tree, bool connected_only, const OracleBudget& budget,
                         std::optional<std::int64_t> seed = std::nullopt);

/// Same, seeded with ex_value(tree, p) - 1 when the closed form exists and
/// connected_only is off.
ExOracleResult ex_oracle(int p, const TreeSpec& tree, bool connected_only, const OracleBudget& budget);

struct RamseyOracleResult {
  bool arrows = false;
  std::optional<Graph> counterexample;  // left-free with right-free complement
  std::uint64_t nodes = 0;
};

/// Whether every graph on N vertices contains `left` or has a complement
/// containing `right`.
RamseyOracleResult ramsey_oracle(int N, const Graph& left, const Graph& right, const OracleBudget& budget);

/// Smallest N <= max_coloring_order that arrows, by increasing N.
std::int64_t ramsey_oracle_number(const Graph& left, const Graph& right, const OracleBudget& budget);

struct LemmaCheck {
  std::string name;
  int p = 0;
  std::uint64_t graphs_checked = 0;
  std::int64_t bound = 0;
  std::int64_t max_edges = 0;
  std::uint64_t violators = 0;
  std::optional<Graph> first_violator;
  bool vacuous = false;
};

struct LemmaReport {
  std::vector<LemmaCheck> checks;
  bool passed() const;
};

/// For every order 6 <= p <= max_p: connected T1-free graphs have at most
/// 2p-3 edges, and T2-free graphs have at most 2p - r(5-r)/2 edges where
/// p = 5k + r. Only n = 6 is supported.
LemmaReport verify_structural_lemmas(int n, int max_p, const OracleBudget& budget);

/// Connected members of Ex(p; tree): graphs that are connected and attain
/// ex(p; tree). The lemma under test says each of them has maximum degree
/// n-4 and floor((n-4)p/2) edges; it is vacuous when no connected graph
/// reaches ex(p; tree).
struct ConnectedExtremalReport {
  TreeSpec tree;
  int p = 0;
  std::int64_t ex = 0;              // oracle value of ex(p; tree)
  std::int64_t expected = 0;        // floor((n-4)p/2)
  std::int64_t connected_max = 0;   // max edges over connected tree-free graphs
  bool degree_all_match = true;     // every connected maximizer has max degree n-4
  std::optional<Graph> witness;     // a connected maximizer
  bool connected_extremal_exists() const { return connected_max == ex; }
  bool passed() const {
    return !connected_extremal_exists() || (connected_max == expected && degree_all_match);
  }
};

/// Requires family T1 or T2 and p >= n >= 7.
ConnectedExtremalReport verify_connected_extremal(int n, TreeFamily family, int p, const OracleBudget& budget);

}  // namespace trt
