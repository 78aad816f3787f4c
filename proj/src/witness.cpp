#include "trt/witness.hpp"

#include "trt/errors.hpp"

namespace trt {

namespace {

int component_order(const WitnessComponent& c) {
  if (const auto* k = std::get_if<CliqueComponent>(&c)) return k->order;
  return static_cast<int>(std::get<DegreeSequenceComponent>(c).degrees.size());
}

std::string describe_sequence(const std::vector<int>& degrees) {
  // Run-length form: "16^23 15^1".
  std::string out;
  std::size_t i = 0;
  while (i < degrees.size()) {
    std::size_t j = i;
    while (j < degrees.size() && degrees[j] == degrees[i]) ++j;
    if (!out.empty()) out += ' ';
    out += std::to_string(degrees[i]) + "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

}  // namespace

std::vector<int> near_regular_degrees(int p, int d) {
  if (d < 0 || d >= p) throw InvalidArgument("near-regular degree must satisfy 0 <= d < p");
  std::vector<int> degrees(static_cast<std::size_t>(p), d);
  if ((static_cast<std::int64_t>(d) * p) % 2 != 0) degrees.back() = d - 1;
  return degrees;
}

int WitnessDescriptor::order() const {
  int total = 0;
  for (const auto& c : components) total += component_order(c);
  return total;
}

Graph WitnessDescriptor::realize() const {
  if (order() > kMaxOrder) throw OrderCapExceeded("witness descriptor exceeds the order cap");
  Graph g;
  for (const auto& c : components) {
    Graph part;
    if (const auto* k = std::get_if<CliqueComponent>(&c))
      part = complete(k->order);
    else
      part = realize_degree_sequence(std::get<DegreeSequenceComponent>(c).degrees);
    g = disjoint_union(g, part);
  }
  return g;
}

std::string WitnessDescriptor::to_string() const {
  if (components.empty()) return "K_0";
  std::string out;
  std::size_t i = 0;
  while (i < components.size()) {
    if (!out.empty()) out += " + ";
    if (const auto* k = std::get_if<CliqueComponent>(&components[i])) {
      std::size_t j = i;
      while (j < components.size() && components[j] == components[i]) ++j;
      const std::size_t copies = j - i;
      if (copies > 1) out += std::to_string(copies);
      out += "K_" + std::to_string(k->order);
      i = j;
    } else {
      const auto& ds = std::get<DegreeSequenceComponent>(components[i]);
      out += "DS(" + std::to_string(ds.degrees.size()) + "; " + describe_sequence(ds.degrees) + ")";
      ++i;
    }
  }
  return out;
}

WitnessDescriptor& WitnessDescriptor::add_cliques(int count, int k) {
  if (count < 0 || k < 0) throw InvalidArgument("negative clique count or order");
  if (k == 0) return *this;
  for (int i = 0; i < count; ++i) components.emplace_back(CliqueComponent{k});
  return *this;
}

WitnessDescriptor& WitnessDescriptor::add_degree_sequence(std::vector<int> degrees) {
  if (!degrees.empty()) components.emplace_back(DegreeSequenceComponent{std::move(degrees)});
  return *this;
}

}  // namespace trt
