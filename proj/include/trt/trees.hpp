#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "trt/graph.hpp"

namespace trt {

/// The six parametric tree families.
///
///   Path    P_n
///   Star    K_{1,n-1}
///   TPrime  the tree with maximum degree n-2 (star with one edge subdivided)
///   TStar   center v0 joined to v1..v_{n-3}, plus the path v_{n-3} v_{n-2} v_{n-1}
///   T1      center v0 joined to v1..v_{n-3}, plus v_{n-4}v_{n-2} and v_{n-3}v_{n-1}
///   T2      center v0 joined to v1..v_{n-3}, plus v_{n-3}v_{n-2} and v_{n-3}v_{n-1}
enum class TreeFamily { Path, Star, TPrime, TStar, T1, T2 };

struct TreeSpec {
  TreeFamily family = TreeFamily::Path;
  int n = 1;
  friend bool operator==(const TreeSpec&, const TreeSpec&) = default;
};

/// CLI/JSON name: "path", "star", "tprime", "tstar", "t1", "t2".
std::string_view family_name(TreeFamily f);
std::optional<TreeFamily> parse_family(std::string_view name);

/// Parses "FAMILY:N", e.g. "t1:12". Throws InvalidArgument.
TreeSpec parse_tree_spec(std::string_view text);
std::string to_string(const TreeSpec& spec);

int min_order(TreeFamily f);
bool is_t1_or_t2(TreeFamily f);

/// Builds the tree with vertex v_i labeled i. Throws InvalidArgument when n
/// is below the family minimum.
Graph make_tree(const TreeSpec& spec);

/// Maximum degree of make_tree(spec), computed from the construction.
int tree_max_degree(const TreeSpec& spec);

}  // namespace trt
