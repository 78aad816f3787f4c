#include "trt/trees.hpp"

#include <algorithm>
#include <array>
#include <charconv>

#include "trt/errors.hpp"

namespace trt {

namespace {

struct FamilyInfo {
  TreeFamily family;
  std::string_view name;
  int min_order;
};

// T1/T2 reference v_{n-4} and v_{n-3} as distinct non-center vertices.
constexpr std::array<FamilyInfo, 6> kFamilies{{
    {TreeFamily::Path, "path", 1},
    {TreeFamily::Star, "star", 2},
    {TreeFamily::TPrime, "tprime", 4},
    {TreeFamily::TStar, "tstar", 4},
    {TreeFamily::T1, "t1", 5},
    {TreeFamily::T2, "t2", 5},
}};

const FamilyInfo& info(TreeFamily f) {
  for (const auto& fi : kFamilies)
    if (fi.family == f) return fi;
  throw InvalidArgument("unknown tree family");
}

}  // namespace

std::string_view family_name(TreeFamily f) { return info(f).name; }

std::optional<TreeFamily> parse_family(std::string_view name) {
  for (const auto& fi : kFamilies)
    if (fi.name == name) return fi.family;
  return std::nullopt;
}

TreeSpec parse_tree_spec(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos)
    throw InvalidArgument("expected FAMILY:N, got '" + std::string(text) + "'");
  const auto family = parse_family(text.substr(0, colon));
  if (!family) throw InvalidArgument("unknown tree family '" + std::string(text.substr(0, colon)) + "'");
  const auto digits = text.substr(colon + 1);
  int n = 0;
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
  if (ec != std::errc{} || ptr != digits.data() + digits.size() || digits.empty())
    throw InvalidArgument("bad tree order in '" + std::string(text) + "'");
  TreeSpec spec{*family, n};
  if (n < min_order(*family) || n > kMaxOrder)
    throw InvalidArgument(to_string(spec) + " is outside the family's order range");
  return spec;
}

std::string to_string(const TreeSpec& spec) {
  return std::string(family_name(spec.family)) + ":" + std::to_string(spec.n);
}

int min_order(TreeFamily f) { return info(f).min_order; }

bool is_t1_or_t2(TreeFamily f) { return f == TreeFamily::T1 || f == TreeFamily::T2; }

Graph make_tree(const TreeSpec& spec) {
  const int n = spec.n;
  if (n < min_order(spec.family))
    throw InvalidArgument(to_string(spec) + " is below the family minimum order " +
                          std::to_string(min_order(spec.family)));
  GraphBuilder b(n);
  switch (spec.family) {
    case TreeFamily::Path:
      for (int v = 0; v + 1 < n; ++v) b.add_edge(v, v + 1);
      break;
    case TreeFamily::Star:
      for (int v = 1; v < n; ++v) b.add_edge(0, v);
      break;
    case TreeFamily::TPrime:
      for (int v = 1; v <= n - 2; ++v) b.add_edge(0, v);
      b.add_edge(n - 2, n - 1);
      break;
    case TreeFamily::TStar:
      for (int v = 1; v <= n - 3; ++v) b.add_edge(0, v);
      b.add_edge(n - 3, n - 2);
      b.add_edge(n - 2, n - 1);
      break;
    case TreeFamily::T1:
      for (int v = 1; v <= n - 3; ++v) b.add_edge(0, v);
      b.add_edge(n - 4, n - 2);
      b.add_edge(n - 3, n - 1);
      break;
    case TreeFamily::T2:
      for (int v = 1; v <= n - 3; ++v) b.add_edge(0, v);
      b.add_edge(n - 3, n - 2);
      b.add_edge(n - 3, n - 1);
      break;
  }
  return b.build();
}

int tree_max_degree(const TreeSpec& spec) {
  const Graph t = make_tree(spec);
  int best = 0;
  for (int v = 0; v < t.order(); ++v) best = std::max(best, t.degree(v));
  return best;
}

}  // namespace trt
