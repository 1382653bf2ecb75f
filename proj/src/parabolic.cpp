#include "coxbound/parabolic.hpp"

#include <algorithm>
#include <array>

namespace coxbound {

std::vector<GeneratorSet> components_of(const CoxeterSystem& system, GeneratorSet subset) {
  std::vector<GeneratorSet> out;
  GeneratorSet unvisited = subset;
  while (!unvisited.empty()) {
    GeneratorSet component = GeneratorSet::single(unvisited.min());
    GeneratorSet frontier = component;
    while (!frontier.empty()) {
      GeneratorSet next;
      for (Generator g : frontier) next = next | (system.diagram_neighbours(g) & subset);
      frontier = next - component;
      component = component | frontier;
    }
    out.push_back(component);
    unvisited = unvisited - component;
  }
  return out;
}

std::vector<GeneratorSet> irreducible_components(const CoxeterSystem& system) {
  return components_of(system, system.all());
}

namespace {

std::string dihedral_name(Order m) {
  switch (m) {
    case 3: return "A2";
    case 4: return "B2";
    case 6: return "G2";
    default: return "I2(" + std::to_string(m) + ")";
  }
}

}  // namespace

std::optional<std::string> finite_type(const CoxeterSystem& system, GeneratorSet component) {
  const std::size_t n = component.size();
  if (n == 0) return std::string("A0");
  if (n == 1) return std::string("A1");

  std::vector<Generator> nodes(component.begin(), component.end());
  std::size_t edges = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Order m = system.m(nodes[i], nodes[j]);
      if (is_infinite(m)) return std::nullopt;
      if (m >= 3) ++edges;
    }
  }
  if (n == 2) return dihedral_name(system.m(nodes[0], nodes[1]));
  if (edges != n - 1) return std::nullopt;  // connected with a cycle

  auto degree = [&](Generator g) { return (system.diagram_neighbours(g) & component).size(); };
  std::vector<Generator> leaves;
  std::vector<Generator> branches;
  for (Generator g : nodes) {
    const std::size_t d = degree(g);
    if (d == 1) leaves.push_back(g);
    if (d >= 3) branches.push_back(g);
    if (d > 3) return std::nullopt;
  }

  // Walk a path from `start` away from `avoid`, returning the edge labels met.
  auto walk = [&](Generator start, Generator first) {
    std::vector<Order> labels;
    Generator prev = start;
    Generator cur = first;
    labels.push_back(system.m(prev, cur));
    while (degree(cur) == 2) {
      const GeneratorSet nb = system.diagram_neighbours(cur) & component;
      Generator next = -1;
      for (Generator g : nb) {
        if (g != prev) next = g;
      }
      labels.push_back(system.m(cur, next));
      prev = cur;
      cur = next;
    }
    return labels;
  };

  if (branches.empty()) {
    // A path: read labels from one end.
    const Generator end = leaves.front();
    const Generator first = (system.diagram_neighbours(end) & component).min();
    std::vector<Order> labels = walk(end, first);
    std::size_t threes = 0;
    std::size_t fours = 0;
    std::size_t fives = 0;
    for (Order m : labels) {
      if (m == 3) ++threes;
      else if (m == 4) ++fours;
      else if (m == 5) ++fives;
      else return std::nullopt;
    }
    const std::string rank = std::to_string(n);
    if (fours == 0 && fives == 0) return "A" + rank;
    const bool at_end = labels.front() != 3 || labels.back() != 3;
    if (fours == 1 && fives == 0) {
      if (at_end) return "B" + rank;
      if (n == 4 && labels[1] == 4) return std::string("F4");
      return std::nullopt;
    }
    if (fives == 1 && fours == 0 && at_end && n <= 4) return "H" + rank;
    return std::nullopt;
  }

  if (branches.size() != 1) return std::nullopt;
  const Generator centre = branches.front();
  std::array<std::size_t, 3> arms{};
  std::size_t k = 0;
  for (Generator g : system.diagram_neighbours(centre) & component) {
    std::vector<Order> labels = walk(centre, g);
    if (std::any_of(labels.begin(), labels.end(), [](Order m) { return m != 3; })) return std::nullopt;
    arms[k++] = labels.size();
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] != 1) return std::nullopt;
  if (arms[1] == 1) return "D" + std::to_string(n);
  if (arms[1] == 2 && arms[2] <= 4) return "E" + std::to_string(n);
  return std::nullopt;
}

bool is_spherical(const CoxeterSystem& system, GeneratorSet subset) {
  for (GeneratorSet component : components_of(system, subset)) {
    if (!finite_type(system, component)) return false;
  }
  return true;
}

GeneratorSet tilde_S(const CoxeterSystem& system) {
  GeneratorSet out;
  for (GeneratorSet component : irreducible_components(system)) {
    if (!finite_type(system, component)) out = out | component;
  }
  return out;
}

}  // namespace coxbound
