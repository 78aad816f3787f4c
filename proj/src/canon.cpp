#include "trt/canon.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "trt/errors.hpp"

namespace trt {

namespace {

std::size_t idx(int v) { return static_cast<std::size_t>(v); }

using Cells = std::vector<std::vector<int>>;

std::uint32_t mask_of(const std::vector<int>& cell) {
  std::uint32_t m = 0;
  for (int v : cell) m |= 1U << v;
  return m;
}

class CanonSearch {
 public:
  explicit CanonSearch(const SmallGraph& g) : g_(g) {}

  CanonicalForm run() {
    Cells root{std::vector<int>(idx(g_.n))};
    std::iota(root[0].begin(), root[0].end(), 0);
    if (g_.n == 0) root.clear();
    std::vector<int> prefix;
    search(root, prefix);

    CanonicalForm out;
    out.lab = best_lab_;
    out.pos.assign(idx(g_.n), 0);
    for (int i = 0; i < g_.n; ++i) out.pos[idx(best_lab_[idx(i)])] = i;
    out.generators = generators_;
    out.code = best_code_;
    out.orbit.resize(idx(g_.n));
    std::iota(out.orbit.begin(), out.orbit.end(), 0);
    for (const auto& gen : generators_) merge_orbits(out.orbit, gen);
    for (int v = 0; v < g_.n; ++v) out.orbit[idx(v)] = find(out.orbit, v);
    return out;
  }

 private:
  static int find(std::vector<int>& parent, int v) {
    while (parent[idx(v)] != v) {
      parent[idx(v)] = parent[idx(parent[idx(v)])];
      v = parent[idx(v)];
    }
    return v;
  }

  static void merge_orbits(std::vector<int>& parent, const std::vector<int>& gen) {
    for (int v = 0; v < static_cast<int>(gen.size()); ++v) {
      int a = find(parent, v);
      int b = find(parent, gen[idx(v)]);
      if (a == b) continue;
      if (a > b) std::swap(a, b);
      parent[idx(b)] = a;
    }
  }

  // Splits cells by neighbour counts into every other cell until stable.
  void refine(Cells& cells) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t s = 0; s < cells.size() && !changed; ++s) {
        const std::uint32_t splitter = mask_of(cells[s]);
        for (std::size_t x = 0; x < cells.size(); ++x) {
          auto& cell = cells[x];
          if (cell.size() == 1) continue;
          auto count = [&](int v) { return std::popcount(g_.adj[idx(v)] & splitter); };
          const int first = count(cell[0]);
          if (std::all_of(cell.begin(), cell.end(), [&](int v) { return count(v) == first; })) continue;
          std::vector<std::pair<int, int>> keyed;
          for (int v : cell) keyed.emplace_back(count(v), v);
          std::sort(keyed.begin(), keyed.end());
          Cells parts;
          for (std::size_t i = 0; i < keyed.size(); ++i) {
            if (i == 0 || keyed[i].first != keyed[i - 1].first) parts.emplace_back();
            parts.back().push_back(keyed[i].second);
          }
          cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(x));
          cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(x), parts.begin(), parts.end());
          changed = true;
          break;
        }
      }
    }
  }

  std::vector<int> stabilizer_orbits(const std::vector<int>& prefix) const {
    std::vector<int> parent(idx(g_.n));
    std::iota(parent.begin(), parent.end(), 0);
    for (const auto& gen : generators_) {
      const bool fixes = std::all_of(prefix.begin(), prefix.end(), [&](int v) { return gen[idx(v)] == v; });
      if (fixes) merge_orbits(parent, gen);
    }
    return parent;
  }

  void search(Cells cells, std::vector<int>& prefix) {
    refine(cells);
    std::size_t target = cells.size();
    for (std::size_t i = 0; i < cells.size(); ++i)
      if (cells[i].size() > 1 && (target == cells.size() || cells[i].size() < cells[target].size())) target = i;
    if (target == cells.size()) {
      leaf(cells);
      return;
    }
    std::vector<int> members = cells[target];
    std::sort(members.begin(), members.end());
    std::vector<int> explored;
    for (int x : members) {
      if (!explored.empty()) {
        auto orbits = stabilizer_orbits(prefix);
        const int ox = find(orbits, x);
        if (std::any_of(explored.begin(), explored.end(), [&](int y) { return find(orbits, y) == ox; })) continue;
      }
      Cells child;
      child.reserve(cells.size() + 1);
      for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i != target) {
          child.push_back(cells[i]);
          continue;
        }
        child.push_back({x});
        std::vector<int> rest;
        for (int v : cells[i])
          if (v != x) rest.push_back(v);
        child.push_back(std::move(rest));
      }
      prefix.push_back(x);
      search(std::move(child), prefix);
      prefix.pop_back();
      explored.push_back(x);
    }
  }

  std::vector<std::uint32_t> code_of(const std::vector<int>& lab) const {
    std::vector<std::uint32_t> code(idx(g_.n), 0);
    for (int i = 0; i < g_.n; ++i)
      for (int j = 0; j < g_.n; ++j)
        if (g_.has_edge(lab[idx(i)], lab[idx(j)])) code[idx(i)] |= 1U << j;
    return code;
  }

  void record_automorphism(const std::vector<int>& from, const std::vector<int>& to) {
    std::vector<int> gen(idx(g_.n));
    bool identity = true;
    for (int i = 0; i < g_.n; ++i) {
      gen[idx(from[idx(i)])] = to[idx(i)];
      identity = identity && from[idx(i)] == to[idx(i)];
    }
    if (!identity) generators_.push_back(std::move(gen));
  }

  void leaf(const Cells& cells) {
    std::vector<int> lab;
    lab.reserve(idx(g_.n));
    for (const auto& c : cells) lab.push_back(c[0]);
    auto code = code_of(lab);
    if (first_lab_.empty() && g_.n > 0) {
      first_lab_ = lab;
      first_code_ = code;
      best_lab_ = lab;
      best_code_ = std::move(code);
      return;
    }
    if (code == first_code_) {
      record_automorphism(lab, first_lab_);
    } else if (code == best_code_) {
      record_automorphism(lab, best_lab_);
    } else if (code > best_code_) {
      best_lab_ = std::move(lab);
      best_code_ = std::move(code);
    }
  }

  const SmallGraph& g_;
  std::vector<int> first_lab_;
  std::vector<std::uint32_t> first_code_;
  std::vector<int> best_lab_;
  std::vector<std::uint32_t> best_code_;
  std::vector<std::vector<int>> generators_;
};

}  // namespace

int SmallGraph::degree(int v) const { return std::popcount(adj[idx(v)]); }

int SmallGraph::edge_count() const {
  int total = 0;
  for (int v = 0; v < n; ++v) total += degree(v);
  return total / 2;
}

void SmallGraph::add_edge(int u, int v) {
  if (u == v || u < 0 || v < 0 || u >= n || v >= n) throw InvalidArgument("bad edge for small graph");
  adj[idx(u)] |= 1U << v;
  adj[idx(v)] |= 1U << u;
}

Graph SmallGraph::to_graph() const {
  GraphBuilder b(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (has_edge(u, v)) b.add_edge(u, v);
  return b.build();
}

SmallGraph SmallGraph::from_graph(const Graph& g) {
  if (g.order() > kSmallMaxOrder) throw OrderCapExceeded("small graphs hold at most 32 vertices");
  SmallGraph s;
  s.n = g.order();
  for (auto [u, v] : g.edges()) s.add_edge(u, v);
  return s;
}

SmallGraph complement(const SmallGraph& g) {
  SmallGraph c;
  c.n = g.n;
  const std::uint32_t all = g.n == 32 ? ~0U : ((1U << g.n) - 1U);
  for (int v = 0; v < g.n; ++v) c.adj[idx(v)] = all & ~g.adj[idx(v)] & ~(1U << v);
  return c;
}

SmallGraph CanonicalForm::graph() const {
  SmallGraph s;
  s.n = static_cast<int>(code.size());
  std::copy(code.begin(), code.end(), s.adj.begin());
  return s;
}

CanonicalForm canonical_form(const SmallGraph& g) {
  if (g.n < 0 || g.n > kSmallMaxOrder) throw OrderCapExceeded("canonical form needs at most 32 vertices");
  return CanonSearch(g).run();
}

bool is_isomorphic(const SmallGraph& a, const SmallGraph& b) {
  if (a.n != b.n || a.edge_count() != b.edge_count()) return false;
  return canonical_form(a).code == canonical_form(b).code;
}

}  // namespace trt
