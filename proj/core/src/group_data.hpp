#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "cct/config.hpp"
#include "cct/errors.hpp"
#include "cct/group.hpp"
#include "cct/perm.hpp"

namespace cct::detail {

struct GroupData {
  std::size_t order = 1;
  std::vector<Element> generators{0};
  std::vector<Element> inverse{0};
  Backing backing = Backing::kCayleyTable;

  // kCayleyTable: order*order products.
  std::vector<Element> table{0};

  // kCayleyGraph: right[x * k + j] = x * step_j, and a word over the steps
  // for every element (words[word_start[x] .. word_start[x+1]]).
  std::size_t steps = 0;
  std::vector<Element> right;
  std::vector<std::uint32_t> word_start;
  std::vector<std::uint32_t> words;

  // Present whenever the group was built from permutations.
  std::vector<Perm> perms;
  std::unordered_map<Perm, Element, PermHash> perm_index;

  std::vector<std::string> labels;

  Element mul(Element x, Element y) const {
    switch (backing) {
      case Backing::kCayleyTable:
        return table[static_cast<std::size_t>(x) * order + y];
      case Backing::kPermutation:
        return perm_index.find(perms[x] * perms[y])->second;
      case Backing::kCayleyGraph: {
        Element z = x;
        for (std::uint32_t i = word_start[y]; i < word_start[y + 1]; ++i) {
          z = right[static_cast<std::size_t>(z) * steps + words[i]];
        }
        return z;
      }
    }
    return 0;
  }
};

/// Result of a breadth-first closure: elements in discovery order together
/// with the right action of each step generator and the BFS tree.
struct CayleyGraph {
  std::size_t order = 0;
  std::size_t steps = 0;
  std::vector<Element> right;  // order * steps
  std::vector<Element> parent;
  std::vector<std::uint32_t> parent_step;
};

/// Breadth-first closure of `identity` under right multiplication by `gens`.
/// Returns the graph and the elements in discovery order.
template <class T, class Hash, class Mul>
std::pair<CayleyGraph, std::vector<T>> bfs_closure(const T& identity, const std::vector<T>& gens,
                                                   Mul&& mul, std::size_t order_max) {
  CayleyGraph graph;
  graph.steps = gens.size();
  std::vector<T> elements{identity};
  std::unordered_map<T, Element, Hash> index;
  index.emplace(identity, 0);
  graph.parent.push_back(0);
  graph.parent_step.push_back(0);
  for (std::size_t x = 0; x < elements.size(); ++x) {
    for (std::size_t j = 0; j < gens.size(); ++j) {
      T y = mul(elements[x], gens[j]);
      auto [it, fresh] = index.try_emplace(y, static_cast<Element>(elements.size()));
      if (fresh) {
        if (elements.size() >= order_max) throw OrderBudgetExceeded(order_max);
        elements.push_back(std::move(y));
        graph.parent.push_back(static_cast<Element>(x));
        graph.parent_step.push_back(static_cast<std::uint32_t>(j));
      }
      graph.right.push_back(it->second);
    }
  }
  graph.order = elements.size();
  return {std::move(graph), std::move(elements)};
}

/// Builds the stored group from a BFS Cayley graph. `gens` are the element
/// indices to record as generators. Permutations, when given, must be listed
/// in the graph's element order.
FiniteGroup finalize(CayleyGraph graph, std::vector<Element> gens, std::vector<Perm> perms,
                     std::vector<std::string> labels, const Limits& limits);

/// Generator indices of a BFS graph: the element reached from the identity
/// by each step, or {0} when there are no steps.
std::vector<Element> step_targets(const CayleyGraph& graph);

}  // namespace cct::detail
