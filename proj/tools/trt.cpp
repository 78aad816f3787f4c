// trt: command-line front end for the tree Turan/Ramsey library.
//
// Exit codes: 0 ok, 1 negative verification, 2 usage or input error,
// 3 oracle budget exceeded.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "json_io.hpp"
#include "trt/acceptance.hpp"
#include "trt/constructions.hpp"
#include "trt/containment.hpp"
#include "trt/errors.hpp"
#include "trt/graph6.hpp"

namespace {

using namespace trt;
using cli::json;

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;
constexpr int kBudget = 3;

TreeFamily family_or_throw(const std::string& name) {
  auto f = parse_family(name);
  if (!f) throw InvalidArgument("unknown tree family '" + name + "'");
  return *f;
}

std::string bounds_text(const std::optional<std::int64_t>& v) { return v ? std::to_string(*v) : "?"; }

void print_trace(const std::vector<RuleCheck>& trace) {
  for (const auto& c : trace)
    std::cout << "  " << (c.holds ? "[x] " : "[ ] ") << c.rule << ": " << c.condition << "\n";
}

struct ExOpts {
  std::string family;
  int n = 0;
  std::int64_t p = 0;
  bool witness = false;
  bool json = false;
  bool explain = false;
};

int run_ex(const ExOpts& o) {
  const TreeSpec tree{family_or_throw(o.family), o.n};
  const ExResult r = ex_value(tree, o.p);
  if (o.json) {
    json out = cli::ex_json(r, o.witness);
    if (o.explain && is_t1_or_t2(tree.family) && o.p >= o.n) {
      const auto e = ex_case_explain(tree, o.p);
      json trace = json::array();
      for (const auto& c : e.trace) trace.push_back({{"condition", c.condition}, {"holds", c.holds}});
      out["explain"] = {{"regime", e.regime}, {"discriminant", e.discriminant}, {"sign", e.sign}, {"trace", trace}};
    }
    std::cout << out.dump(2) << "\n";
    return kOk;
  }
  std::cout << "ex(" << o.p << "; " << to_string(tree) << ") = " << r.value << "\n"
            << "  k = " << r.k << ", r = " << r.r << "\n"
            << "  branch: " << branch_name(r.branch) << (r.tie ? " (tie)" : "") << "\n";
  if (!r.branch_values.empty()) {
    std::cout << "  branch values:";
    for (auto v : r.branch_values) std::cout << " " << v;
    std::cout << "\n";
  }
  std::cout << "  witness: " << r.witness.to_string() << "\n";
  if (o.explain && is_t1_or_t2(tree.family) && o.p >= o.n) {
    const auto e = ex_case_explain(tree, o.p);
    std::cout << "  regime: " << e.regime << ", discriminant " << e.discriminant << "\n";
    for (const auto& c : e.trace) std::cout << "  " << (c.holds ? "[x] " : "[ ] ") << c.condition << "\n";
  }
  if (o.witness) std::cout << encode_graph6(r.witness.realize()) << "\n";
  return kOk;
}

struct RamseyOpts {
  std::string left, right;
  bool witness = false;
  bool json = false;
};

int run_ramsey(const RamseyOpts& o) {
  const TreeSpec left = parse_tree_spec(o.left);
  const TreeSpec right = parse_tree_spec(o.right);
  const RamseyAnswer a = ramsey_value(left, right);
  if (o.witness && a.witness) verify_ramsey_witness(left, right, *a.witness);
  if (o.json) {
    std::cout << cli::ramsey_json(a, o.witness).dump(2) << "\n";
    return kOk;
  }
  std::cout << "r(" << to_string(left) << ", " << to_string(right) << "): ";
  switch (a.kind) {
    case RamseyKind::Exact: std::cout << *a.value(); break;
    case RamseyKind::Range: std::cout << "between " << bounds_text(a.lo) << " and " << bounds_text(a.hi); break;
    case RamseyKind::Unknown: std::cout << "unknown, at least " << bounds_text(a.lo); break;
  }
  std::cout << "\n  kind: " << kind_name(a.kind) << "\n  rule: " << a.rule << "\n";
  if (!a.annotation.empty()) std::cout << "  note: " << a.annotation << "\n";
  if (a.witness) std::cout << "  witness: " << a.witness->to_string() << "\n";
  print_trace(a.trace);
  if (o.witness && a.witness) std::cout << encode_graph6(a.witness->realize()) << "\n";
  return kOk;
}

struct ConstructOpts {
  std::string family, left, right;
  int n = 0;
  std::int64_t p = 0;
  int d = 0;
  bool json = false;
};

void emit_construction(const Graph& g, const json& descriptor, bool with_json) {
  std::cout << encode_graph6(g) << "\n";
  if (with_json) std::cerr << descriptor.dump(2) << "\n";
}

int run_construct_extremal(const ConstructOpts& o) {
  const TreeSpec tree{family_or_throw(o.family), o.n};
  const auto c = extremal_witness(tree, o.p);
  json d = cli::witness_json(c.descriptor);
  d["tree"] = to_string(tree);
  d["p"] = o.p;
  d["edges"] = c.graph.edge_count();
  emit_construction(c.graph, d, o.json);
  return kOk;
}

int run_construct_ramsey(const ConstructOpts& o) {
  const TreeSpec left = parse_tree_spec(o.left);
  const TreeSpec right = parse_tree_spec(o.right);
  const auto c = ramsey_witness(left, right);
  json d = cli::witness_json(c.descriptor);
  d["left"] = to_string(left);
  d["right"] = to_string(right);
  d["edges"] = c.graph.edge_count();
  emit_construction(c.graph, d, o.json);
  return kOk;
}

int run_construct_near_regular(const ConstructOpts& o) {
  if (o.p < 0 || o.p > kMaxOrder) throw InvalidArgument("--p must be in 0..128");
  const int p = static_cast<int>(o.p);
  if (o.d < 0 || (p > 0 && o.d >= p)) throw InvalidArgument("--d must satisfy 0 <= d < p");
  const Graph g = near_regular(p, o.d);
  json d = {{"p", p}, {"d", o.d}, {"edges", g.edge_count()}, {"degrees", near_regular_degrees(p, o.d)}};
  emit_construction(g, d, o.json);
  return kOk;
}

struct CheckOpts {
  std::string graph;
  std::string avoid;
  bool complement = false;
  bool json = false;
};

std::vector<Graph> read_graphs(const std::string& path) {
  if (path == "-") return read_graph6_stream(std::cin);
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open '" + path + "'");
  return read_graph6_stream(in);
}

int run_check(const CheckOpts& o) {
  const TreeSpec tree = parse_tree_spec(o.avoid);
  const auto graphs = read_graphs(o.graph);
  if (graphs.empty()) throw InvalidArgument("no graph in input");
  const Graph pattern = make_tree(tree);
  bool any = false;
  json results = json::array();
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const Graph host = o.complement ? trt::complement(graphs[i]) : graphs[i];
    const auto emb = find_embedding(host, pattern);
    any = any || emb.has_value();
    if (o.json) {
      results.push_back({{"index", i},
                         {"order", host.order()},
                         {"contains", emb.has_value()},
                         {"embedding", emb ? json(emb->map) : json(nullptr)}});
      continue;
    }
    std::cout << "graph " << i << " (" << host.order() << " vertices" << (o.complement ? ", complement" : "")
              << "): ";
    if (!emb) {
      std::cout << to_string(tree) << "-free\n";
      continue;
    }
    std::cout << "contains " << to_string(tree) << "\n";
    for (std::size_t t = 0; t < emb->map.size(); ++t) std::cout << "  " << t << " -> " << emb->map[t] << "\n";
  }
  if (o.json)
    std::cout << json{{"avoid", to_string(tree)}, {"complement", o.complement}, {"free", !any}, {"graphs", results}}
                     .dump(2)
              << "\n";
  return any ? kNegative : kOk;
}

struct OracleOpts {
  std::string family, left, right;
  int n = 0;
  int p = 0;
  int order = 0;
  int max_p = 0;
  bool connected = false;
  bool json = false;
  std::optional<int> max_order;
  std::optional<double> time_limit;
};

OracleBudget budget_of(const OracleOpts& o) {
  OracleBudget b = OracleBudget::from_env();
  if (o.max_order) {
    b.max_order = *o.max_order;
    b.max_coloring_order = *o.max_order;
  }
  if (o.time_limit) b.time_limit = std::chrono::milliseconds(static_cast<std::int64_t>(*o.time_limit * 1000.0));
  return b;
}

int run_oracle_ex(const OracleOpts& o) {
  const TreeSpec tree{family_or_throw(o.family), o.n};
  make_tree(tree);
  const auto res = ex_oracle(o.p, tree, o.connected, budget_of(o));
  std::optional<std::int64_t> formula;
  if (!o.connected && tree.family != TreeFamily::TStar) formula = ex_value(tree, o.p).value;
  const bool agrees = !formula || *formula == res.value;
  if (o.json) {
    std::cout << json{{"family", family_name(tree.family)},
                      {"n", tree.n},
                      {"p", o.p},
                      {"connected", o.connected},
                      {"value", res.value},
                      {"formula", formula ? json(*formula) : json(nullptr)},
                      {"agrees", agrees},
                      {"witness", encode_graph6(res.witness)},
                      {"nodes", res.nodes}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << "oracle ex" << (o.connected ? " (connected)" : "") << "(" << o.p << "; " << to_string(tree)
              << ") = " << res.value << "\n";
    if (formula) std::cout << "  formula: " << *formula << (agrees ? " (agrees)" : " (MISMATCH)") << "\n";
    std::cout << "  witness: " << encode_graph6(res.witness) << "\n  nodes: " << res.nodes << "\n";
  }
  return agrees ? kOk : kNegative;
}

int run_oracle_ramsey(const OracleOpts& o) {
  const TreeSpec left = parse_tree_spec(o.left);
  const TreeSpec right = parse_tree_spec(o.right);
  const auto res = ramsey_oracle(o.order, make_tree(left), make_tree(right), budget_of(o));
  if (o.json) {
    std::cout << json{{"left", to_string(left)},
                      {"right", to_string(right)},
                      {"order", o.order},
                      {"arrows", res.arrows},
                      {"counterexample", res.counterexample ? json(encode_graph6(*res.counterexample)) : json(nullptr)},
                      {"nodes", res.nodes}}
                     .dump(2)
              << "\n";
    return kOk;
  }
  std::cout << o.order << " -> (" << to_string(left) << ", " << to_string(right) << "): " << (res.arrows ? "yes" : "no")
            << "\n";
  if (res.counterexample) std::cout << "  counterexample: " << encode_graph6(*res.counterexample) << "\n";
  std::cout << "  nodes: " << res.nodes << "\n";
  return kOk;
}

int run_oracle_lemmas(const OracleOpts& o) {
  const auto report = verify_structural_lemmas(6, o.max_p, budget_of(o));
  if (o.json) {
    std::cout << cli::lemma_json(report).dump(2) << "\n";
  } else {
    for (const auto& c : report.checks) {
      std::cout << c.name << " p=" << c.p << ": " << c.graphs_checked << " graphs, max " << c.max_edges << " vs bound "
                << c.bound << ", violators " << c.violators << (c.vacuous ? " (vacuous)" : "") << "\n";
    }
    std::cout << (report.passed() ? "all checks hold" : "VIOLATION") << "\n";
  }
  return report.passed() ? kOk : kNegative;
}

int run_selftest(std::optional<int> max_order) {
  OracleBudget budget = OracleBudget::from_env();
  if (max_order) budget.max_order = *max_order;
  bool ok = true;
  run_acceptance(budget, [&](const CriterionResult& r) {
    std::cout << format_criterion(r) << std::endl;
    ok = ok && r.passed;
  });
  return ok ? kOk : kNegative;
}

int dispatch(int argc, char** argv) {
  CLI::App app{"Turan and Ramsey numbers for small tree families"};
  app.require_subcommand(1);
  std::function<int()> action;

  ExOpts ex;
  auto* ex_cmd = app.add_subcommand("ex", "closed-form Turan number ex(p; T)");
  ex_cmd->add_option("--family", ex.family, "path|star|tprime|tstar|t1|t2")->required();
  ex_cmd->add_option("--n", ex.n, "tree order")->required();
  ex_cmd->add_option("--p", ex.p, "host order")->required();
  ex_cmd->add_flag("--witness", ex.witness, "also print the extremal graph in graph6");
  ex_cmd->add_flag("--explain", ex.explain, "case analysis for t1/t2");
  ex_cmd->add_flag("--json", ex.json);
  ex_cmd->callback([&] { action = [&] { return run_ex(ex); }; });

  RamseyOpts rm;
  auto* rm_cmd = app.add_subcommand("ramsey", "Ramsey number r(T, T') from the rule table");
  rm_cmd->add_option("--left", rm.left, "FAMILY:M")->required();
  rm_cmd->add_option("--right", rm.right, "FAMILY:N")->required();
  rm_cmd->add_flag("--witness", rm.witness, "also print the verified lower-bound graph in graph6");
  rm_cmd->add_flag("--json", rm.json);
  rm_cmd->callback([&] { action = [&] { return run_ramsey(rm); }; });

  ConstructOpts co;
  auto* co_cmd = app.add_subcommand("construct", "graph6 constructions");
  co_cmd->require_subcommand(1);
  auto* co_ext = co_cmd->add_subcommand("extremal", "extremal graph for ex(p; T)");
  co_ext->add_option("--family", co.family)->required();
  co_ext->add_option("--n", co.n)->required();
  co_ext->add_option("--p", co.p)->required();
  co_ext->add_flag("--json", co.json, "descriptor as JSON on stderr");
  co_ext->callback([&] { action = [&] { return run_construct_extremal(co); }; });
  auto* co_rw = co_cmd->add_subcommand("ramsey-witness", "lower-bound graph for r(T, T')");
  co_rw->add_option("--left", co.left)->required();
  co_rw->add_option("--right", co.right)->required();
  co_rw->add_flag("--json", co.json, "descriptor as JSON on stderr");
  co_rw->callback([&] { action = [&] { return run_construct_ramsey(co); }; });
  auto* co_nr = co_cmd->add_subcommand("near-regular", "near-regular graph on p vertices");
  co_nr->add_option("--p", co.p)->required();
  co_nr->add_option("--d", co.d)->required();
  co_nr->add_flag("--json", co.json, "descriptor as JSON on stderr");
  co_nr->callback([&] { action = [&] { return run_construct_near_regular(co); }; });

  CheckOpts ck;
  auto* ck_cmd = app.add_subcommand("check", "test graph6 input for a copy of a tree");
  ck_cmd->add_option("--graph", ck.graph, "graph6 file, or - for stdin")->required();
  ck_cmd->add_option("--avoid", ck.avoid, "FAMILY:N")->required();
  ck_cmd->add_flag("--complement", ck.complement, "test the complement instead");
  ck_cmd->add_flag("--json", ck.json);
  ck_cmd->callback([&] { action = [&] { return run_check(ck); }; });

  OracleOpts orc;
  auto* or_cmd = app.add_subcommand("oracle", "exhaustive searches at small orders");
  or_cmd->require_subcommand(1);
  or_cmd->add_option("--max-order", orc.max_order, "order cap (default 9, or TRT_MAX_ORDER)");
  or_cmd->add_option("--time-limit", orc.time_limit, "seconds");
  or_cmd->add_flag("--json", orc.json);
  auto* or_ex = or_cmd->add_subcommand("ex", "ex(p; T) by enumeration");
  or_ex->add_option("--family", orc.family)->required();
  or_ex->add_option("--n", orc.n)->required();
  or_ex->add_option("--p", orc.p)->required();
  or_ex->add_flag("--connected", orc.connected, "connected hosts only");
  or_ex->callback([&] { action = [&] { return run_oracle_ex(orc); }; });
  auto* or_rm = or_cmd->add_subcommand("ramsey", "does K_order arrow (T, T')");
  or_rm->add_option("--left", orc.left)->required();
  or_rm->add_option("--right", orc.right)->required();
  or_rm->add_option("--order", orc.order)->required();
  or_rm->callback([&] { action = [&] { return run_oracle_ramsey(orc); }; });
  auto* or_lm = or_cmd->add_subcommand("lemmas", "edge bounds for T-free graphs with n = 6");
  or_lm->add_option("--max-p", orc.max_p)->required();
  or_lm->callback([&] { action = [&] { return run_oracle_lemmas(orc); }; });
  for (auto* sub : {or_ex, or_rm, or_lm}) sub->fallthrough();

  std::optional<int> self_max;
  auto* st_cmd = app.add_subcommand("selftest", "run the acceptance suite");
  st_cmd->add_option("--max-order", self_max);
  st_cmd->callback([&] { action = [&] { return run_selftest(self_max); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    std::cerr << app.help();
    return kUsage;
  }
  return action();
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return dispatch(argc, argv);
  } catch (const trt::BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const trt::WitnessVerificationFailed& e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    return kNegative;
  } catch (const trt::InternalConsistencyError& e) {
    std::cerr << "inconsistent rules: " << e.what() << "\n";
    return kNegative;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}
