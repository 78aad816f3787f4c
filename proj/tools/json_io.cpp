#include "json_io.hpp"

#include <string>
#include <type_traits>

#include "trt/graph6.hpp"

namespace trt::cli {

namespace {

json optional_int(const std::optional<std::int64_t>& v) { return v ? json(*v) : json(nullptr); }

}  // namespace

json witness_json(const WitnessDescriptor& w) {
  json comps = json::array();
  for (const auto& c : w.components) {
    std::visit(
        [&](const auto& part) {
          using T = std::decay_t<decltype(part)>;
          if constexpr (std::is_same_v<T, CliqueComponent>)
            comps.push_back({{"clique", part.order}});
          else
            comps.push_back({{"degree_sequence", part.degrees}});
        },
        c);
  }
  return {{"description", w.to_string()}, {"order", w.order()}, {"components", comps}};
}

json ex_json(const ExResult& r, bool with_graph6) {
  json w = witness_json(r.witness);
  w["graph6"] = with_graph6 ? json(encode_graph6(r.witness.realize())) : json(nullptr);
  return {
      {"family", family_name(r.tree.family)},
      {"n", r.tree.n},
      {"p", r.p},
      {"k", r.k},
      {"r", r.r},
      {"value", r.value},
      {"branch", branch_name(r.branch)},
      {"tie", r.tie},
      {"branch_values", r.branch_values},
      {"witness", w},
  };
}

json ramsey_json(const RamseyAnswer& a, bool with_graph6) {
  json trace = json::array();
  for (const auto& c : a.trace) trace.push_back({{"rule", c.rule}, {"condition", c.condition}, {"holds", c.holds}});
  json w = nullptr;
  if (a.witness) {
    w = witness_json(*a.witness);
    w["graph6"] = with_graph6 ? json(encode_graph6(a.witness->realize())) : json(nullptr);
  }
  return {
      {"left", to_string(a.left)},
      {"right", to_string(a.right)},
      {"kind", kind_name(a.kind)},
      {"value", optional_int(a.value())},
      {"lo", optional_int(a.lo)},
      {"hi", optional_int(a.hi)},
      {"rule", a.rule},
      {"annotation", a.annotation},
      {"trace", trace},
      {"witness", w},
  };
}

json lemma_json(const LemmaReport& report) {
  json checks = json::array();
  for (const auto& c : report.checks) {
    checks.push_back({
        {"name", c.name},
        {"p", c.p},
        {"graphs_checked", c.graphs_checked},
        {"bound", c.bound},
        {"max_edges", c.max_edges},
        {"violators", c.violators},
        {"first_violator", c.first_violator ? json(encode_graph6(*c.first_violator)) : json(nullptr)},
        {"vacuous", c.vacuous},
    });
  }
  return {{"passed", report.passed()}, {"checks", checks}};
}

}  // namespace trt::cli
