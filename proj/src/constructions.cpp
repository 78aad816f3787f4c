#include "trt/constructions.hpp"

#include "trt/containment.hpp"
#include "trt/errors.hpp"
#include "trt/ramsey.hpp"
#include "trt/turan.hpp"

namespace trt {

std::optional<FrobeniusRep> frobenius_rep(std::int64_t a, std::int64_t b, std::int64_t t) {
  if (a < 1 || b < 1) throw InvalidArgument("frobenius_rep needs a, b >= 1");
  if (t < 0) return std::nullopt;
  for (std::int64_t x = 0; a * x <= t; ++x) {
    const std::int64_t rest = t - a * x;
    if (rest % b == 0) return FrobeniusRep{x, rest / b};
  }
  return std::nullopt;
}

Graph near_regular(int p, int d) { return realize_degree_sequence(near_regular_degrees(p, d)); }

Construction extremal_witness(const TreeSpec& tree, std::int64_t p) {
  const ExResult ex = ex_value(tree, p);
  Construction out{ex.witness.realize(), ex.witness};
  if (out.graph.order() != p)
    throw WitnessVerificationFailed("extremal witness has order " + std::to_string(out.graph.order()));
  if (out.graph.edge_count() != ex.value)
    throw WitnessVerificationFailed("extremal witness has " + std::to_string(out.graph.edge_count()) +
                                    " edges, expected " + std::to_string(ex.value));
  if (contains_subgraph(out.graph, make_tree(tree)))
    throw WitnessVerificationFailed("extremal witness contains " + to_string(tree));
  return out;
}

std::int64_t degree_lower_bound(std::int64_t d1, std::int64_t d2, DegreeBoundMode mode) {
  if (d1 < 2 || d2 < 2) throw InvalidArgument("degree bounds need both maximum degrees >= 2");
  switch (mode) {
    case DegreeBoundMode::Parity:
      return d1 + d2 - (((d1 - 1) * (d2 - 1)) % 2 != 0 ? 1 : 0);
    case DegreeBoundMode::StarVsBigger:
      return 2 * d2 - 1;
    case DegreeBoundMode::Disconnected:
      return d1 + d2;
  }
  return 0;
}

WitnessDescriptor degree_bound_witness(std::int64_t d1, std::int64_t d2, std::int64_t m, DegreeBoundMode mode) {
  const std::int64_t order = degree_lower_bound(d1, d2, mode) - 1;
  WitnessDescriptor w;
  switch (mode) {
    case DegreeBoundMode::Parity:
      // Always (d1-1)-regular: the order is even whenever d1-1 is odd.
      w.add_degree_sequence(near_regular_degrees(static_cast<int>(order), static_cast<int>(d1 - 1)));
      break;
    case DegreeBoundMode::StarVsBigger:
      if (!(d1 < d2 && d2 <= m)) throw InvalidArgument("degree bound needs d1 < d2 <= m");
      w.add_cliques(2, static_cast<int>(d2 - 1));
      break;
    case DegreeBoundMode::Disconnected: {
      if (!(d1 != m - 1 && d2 > m)) throw InvalidArgument("degree bound needs d1 != m-1 and d2 > m");
      if ((d1 - 1) * order % 2 == 0) {
        w.add_degree_sequence(near_regular_degrees(static_cast<int>(order), static_cast<int>(d1 - 1)));
        break;
      }
      // No (d1-1)-regular graph on an odd order: split off an odd clique too
      // small to hold a connected graph of order m.
      const std::int64_t c = (m - 1) % 2 != 0 ? m - 1 : m - 2;
      if (c < d1) throw InvalidArgument("no odd clique of order >= d1 below m");
      w.add_cliques(1, static_cast<int>(c));
      w.add_degree_sequence(near_regular_degrees(static_cast<int>(order - c), static_cast<int>(d1 - 1)));
      break;
    }
  }
  return w;
}

std::optional<WitnessDescriptor> clique_pair_witness(std::int64_t m, std::int64_t count) {
  const auto rep = frobenius_rep(m - 1, m - 2, count);
  if (!rep) return std::nullopt;
  WitnessDescriptor w;
  w.add_cliques(static_cast<int>(rep->x), static_cast<int>(m - 1));
  w.add_cliques(static_cast<int>(rep->y), static_cast<int>(m - 2));
  return w;
}

Construction verify_ramsey_witness(const TreeSpec& left, const TreeSpec& right, const WitnessDescriptor& descriptor) {
  Construction out{descriptor.realize(), descriptor};
  if (auto e = find_embedding(out.graph, make_tree(left)))
    throw WitnessVerificationFailed("witness " + descriptor.to_string() + " contains " + to_string(left));
  if (auto e = find_embedding(complement(out.graph), make_tree(right)))
    throw WitnessVerificationFailed("complement of witness " + descriptor.to_string() + " contains " +
                                    to_string(right));
  return out;
}

Construction ramsey_witness(const TreeSpec& left, const TreeSpec& right) {
  const RamseyAnswer ans = ramsey_value(left, right);
  if (!ans.witness || !ans.lo)
    throw InvalidArgument("no witness construction for " + to_string(left) + " vs " + to_string(right));
  if (ans.witness->order() != *ans.lo - 1)
    throw WitnessVerificationFailed("witness order " + std::to_string(ans.witness->order()) +
                                    " does not match lower bound " + std::to_string(*ans.lo));
  return verify_ramsey_witness(left, right, *ans.witness);
}

}  // namespace trt
